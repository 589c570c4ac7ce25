#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "arthur/error.hpp"
#include "arthur/packets.hpp"

namespace arthur {
namespace {

JordanBlock blk(const char* rho, int a, int b) { return JordanBlock{rho, a, b, Rational(0)}; }

OrderedJord ordered(std::vector<JordanBlock> blocks) { return OrderedJord{std::move(blocks), std::nullopt}; }

bool has_kind(const std::vector<OrderViolation>& vs, OrderViolationKind k) {
  return std::any_of(vs.begin(), vs.end(), [k](const auto& v) { return v.kind == k; });
}

TEST(BlockSign, Examples) {
  EXPECT_EQ(block_sign(1, 1, 0, Sign::Plus), Sign::Plus);
  EXPECT_EQ(block_sign(2, 2, 1, Sign::Plus), Sign::Plus);
  EXPECT_EQ(block_sign(2, 2, 0, Sign::Minus), Sign::Minus);
  EXPECT_THROW(block_sign(2, 2, 1, Sign::Minus), Error);
  EXPECT_THROW(block_sign(3, 5, 2, Sign::Plus), Error);
  EXPECT_THROW(block_sign(3, 5, -1, Sign::Plus), Error);
}

TEST(LocalParams, Shape) {
  EXPECT_EQ(local_params(1, 1), (std::vector<std::pair<int, Sign>>{{0, Sign::Plus}, {0, Sign::Minus}}));
  EXPECT_EQ(local_params(2, 2),
            (std::vector<std::pair<int, Sign>>{{0, Sign::Plus}, {0, Sign::Minus}, {1, Sign::Plus}}));
}

TEST(ValidateParams, Examples) {
  const auto one = ordered({blk("r", 1, 1)});
  EXPECT_TRUE(validate_params(one, {{0}, {Sign::Plus}}, Sign::Plus).empty());
  auto v = validate_params(one, {{0}, {Sign::Minus}}, Sign::Plus);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ParamViolationKind::Constraint2);

  v = validate_params(ordered({blk("r", 2, 2)}), {{1}, {Sign::Minus}}, Sign::Plus);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ParamViolationKind::Constraint1);
  EXPECT_EQ(v[0].position, 0u);

  v = validate_params(one, {{}, {}}, Sign::Plus);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ParamViolationKind::SizeMismatch);
}

TEST(EnumerateParams, Examples) {
  EXPECT_EQ(enumerate_params(ordered({blk("r", 1, 1)}), Sign::Plus),
            (std::vector<PacketParams>{{{0}, {Sign::Plus}}}));
  EXPECT_EQ(enumerate_params(ordered({blk("r", 2, 2)}), Sign::Plus),
            (std::vector<PacketParams>{{{1}, {Sign::Plus}}}));
  EXPECT_EQ(enumerate_params(ordered({blk("r", 2, 2)}), Sign::Minus),
            (std::vector<PacketParams>{{{0}, {Sign::Plus}}, {{0}, {Sign::Minus}}}));
  EXPECT_EQ(count_params(std::vector<JordanBlock>{blk("r", 2, 2)}, Sign::Minus), 2u);
}

// Brute force straight from the definitions, over a box strictly larger
// than the admissible range of t.
std::vector<PacketParams> brute_force(const std::vector<JordanBlock>& jord, Sign eps) {
  std::vector<PacketParams> out;
  const std::size_t n = jord.size();
  PacketParams cur{std::vector<int>(n), std::vector<Sign>(n)};
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      int minus = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const int m = std::min(jord[k].a, jord[k].b);
        if (cur.t[k] < 0 || 2 * cur.t[k] > m) return;
        if (2 * cur.t[k] == m && cur.eta[k] != Sign::Plus) return;
        if (cur.eta[k] == Sign::Minus && m % 2 == 1) ++minus;
        minus += m / 2 + cur.t[k];
      }
      if ((minus % 2 == 0) == (eps == Sign::Plus)) out.push_back(cur);
      return;
    }
    for (int t = -1; t <= 4; ++t) {
      for (Sign e : {Sign::Plus, Sign::Minus}) {
        cur.t[i] = t;
        cur.eta[i] = e;
        self(self, i + 1);
      }
    }
  };
  rec(rec, 0);
  return out;
}

TEST(EnumerateParams, MatchesBruteForce) {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> dim(1, 6), len(0, 4);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<JordanBlock> jord;
    const int n = len(gen);
    for (int k = 0; k < n; ++k) jord.push_back(blk("r", dim(gen), dim(gen)));
    for (Sign eps : {Sign::Plus, Sign::Minus}) {
      const auto got = enumerate_params(ordered(jord), eps);
      ASSERT_EQ(got, brute_force(jord, eps));
      ASSERT_EQ(count_params(jord, eps), got.size());
      for (const auto& p : got) ASSERT_TRUE(validate_params(ordered(jord), p, eps).empty());
    }
  }
}

TEST(EnumerateParams, SignsSplitTheProduct) {
  std::mt19937 gen(12);
  std::uniform_int_distribution<int> dim(1, 12), len(0, 7);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<JordanBlock> jord;
    const int n = len(gen);
    std::uint64_t product = 1;
    for (int k = 0; k < n; ++k) {
      jord.push_back(blk("r", dim(gen), dim(gen)));
      product *= local_params(jord.back().a, jord.back().b).size();
    }
    ASSERT_EQ(count_params(jord, Sign::Plus) + count_params(jord, Sign::Minus), product);
  }
}

TEST(ValidateOrder, CanonicalConstructionPasses) {
  // Target (r,5,3): ζ₀ = +, prime (r,5,1).
  const TargetTriple target = TargetTriple::make("r", 5, 3);
  const std::vector<JordanBlock> jord{blk("r", 7, 1), blk("r", 5, 1), blk("r", 1, 1), blk("r", 3, 3)};
  const OrderedJord c = canonical_order(jord, target);
  EXPECT_TRUE(validate_order(c, target).empty());
}

TEST(ValidateOrder, PoleContributorBelowPrime) {
  // (r,5,3) contributes a pole for the target (r,5,3); it must sit above
  // the prime (r,5,1).
  const TargetTriple target = TargetTriple::make("r", 5, 3);
  const auto vs = validate_order(ordered({blk("r", 5, 3), blk("r", 5, 1)}), target);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, OrderViolationKind::Pp1);
  EXPECT_EQ(vs[0].positions, (std::vector<std::size_t>{0, 1}));
}

TEST(ValidateOrder, ConditionZero) {
  // Target (r,7,5): (A₀,B₀,ζ₀) = (5,1,+), prime (4,2,+). X = (r,6,2) has
  // (A,B,ζ) = (3,2,+): A < A₀, B = B₀ + 1.
  const TargetTriple target = TargetTriple::make("r", 7, 5);
  const auto vs = validate_order(ordered({blk("r", 7, 3), blk("r", 6, 2)}), target);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, OrderViolationKind::Condition0);
  EXPECT_TRUE(validate_order(ordered({blk("r", 6, 2), blk("r", 7, 3)}), target).empty());
}

TEST(ValidateOrder, PropertyP) {
  // (r,5,1) = (2,2,+) dominates (r,1,1) = (0,0,+) in A and B.
  const auto vs = check_property_p(std::vector<JordanBlock>{blk("r", 5, 1), blk("r", 2, 2)});
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, OrderViolationKind::P);
  EXPECT_TRUE(check_property_p(std::vector<JordanBlock>{blk("r", 5, 1), blk("q", 2, 2)}).empty());
  EXPECT_TRUE(check_property_p(std::vector<JordanBlock>{blk("r", 5, 1), blk("r", 1, 3)}).empty());
}

TEST(ValidateOrder, ExceptionalMinimality) {
  // a₀ = b₀ − 1: the prime (r,3,2) must be the smallest element.
  const TargetTriple target = TargetTriple::make("r", 3, 4);
  ASSERT_TRUE(target.is_exceptional());
  const auto vs = validate_order(ordered({blk("q", 1, 1), blk("r", 3, 2)}), target);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, OrderViolationKind::ExceptionalMinimality);
  EXPECT_TRUE(validate_order(ordered({blk("r", 3, 2), blk("q", 1, 1)}), target).empty());
}

TEST(ValidateOrder, BoundaryConditions) {
  // Target (r,7,3): (A₀,B₀,ζ₀) = (4,2,+), prime (A′₀,B′₀) = (3,3).
  const TargetTriple target = TargetTriple::make("r", 7, 3);
  // (1) A = A₀, B > B′₀: (r,9,1) = (4,4,+) must be above.
  EXPECT_TRUE(has_kind(validate_order(ordered({blk("r", 9, 1), blk("r", 7, 1)}), target),
                       OrderViolationKind::Condition1));
  // (2) A = A′₀, B < B₀: (r,4,4) = (3,0,+) must be below.
  EXPECT_TRUE(has_kind(validate_order(ordered({blk("r", 7, 1), blk("r", 4, 4)}), target),
                       OrderViolationKind::Condition2));
  // (3) B = B₀, A < A′₀: (r,5,1) = (2,2,+) must be below.
  EXPECT_TRUE(has_kind(validate_order(ordered({blk("r", 7, 1), blk("r", 5, 1)}), target),
                       OrderViolationKind::Condition3));
  // (4) B = B′₀, A > A₀: (r,10,4) = (6,3,+) must be above.
  EXPECT_TRUE(has_kind(validate_order(ordered({blk("r", 10, 4), blk("r", 7, 1)}), target),
                       OrderViolationKind::Condition4));
}

TEST(ValidateOrder, MissingPrimeThrows) {
  const TargetTriple target = TargetTriple::make("r", 5, 3);
  EXPECT_THROW(validate_order(ordered({blk("r", 1, 1)}), target), Error);
  EXPECT_THROW(validate_order(ordered({blk("r", 5, 1), blk("r", 1, 1)}), target, OrderRole::Base, 1), Error);
  EXPECT_THROW(canonical_order(std::vector<JordanBlock>{blk("r", 1, 1)}, target), Error);
}

TEST(CanonicalOrder, Examples) {
  const TargetTriple target = TargetTriple::make("r", 2, 2);
  // (A,B,ζ) = (3,3,−) is (r,1,7); (1,1,+) is (r,3,1).
  const OrderedJord c = canonical_order(std::vector<JordanBlock>{blk("r", 1, 7), blk("r", 3, 1)}, target);
  EXPECT_EQ(c.blocks, (std::vector<JordanBlock>{blk("r", 3, 1), blk("r", 1, 7)}));

  const OrderedJord twice =
      canonical_order(std::vector<JordanBlock>{blk("r", 3, 3), blk("q", 1, 1), blk("r", 3, 3)}, target);
  EXPECT_EQ(twice.blocks, (std::vector<JordanBlock>{blk("q", 1, 1), blk("r", 3, 3), blk("r", 3, 3)}));
  EXPECT_EQ(canonical_order(twice.blocks, target).blocks, twice.blocks);
}

// Random Jord of one class (as good parity forces) with the prime block
// present; canonical_order must pass validate_order.
TEST(CanonicalOrder, AlwaysValidates) {
  std::mt19937 gen(21);
  std::uniform_int_distribution<int> d(1, 12), len(0, 6), pick(0, 2);
  int checked = 0;
  for (int iter = 0; iter < 4000; ++iter) {
    const int a0 = d(gen);
    const int b0 = 2 + d(gen) % 10;
    const TargetTriple target = TargetTriple::make("r", a0, b0);
    std::vector<JordanBlock> jord;
    if (target.has_prime()) jord.push_back(target.prime_block());
    const int n = len(gen);
    for (int k = 0; k < n; ++k) {
      int a = d(gen), b = d(gen);
      if ((a + b + a0 + b0) % 2 != 0) ++b;
      jord.push_back(pick(gen) == 0 ? blk("q", a, b) : blk("r", a, b));
    }
    std::shuffle(jord.begin(), jord.end(), gen);
    const OrderedJord c = canonical_order(jord, target);
    ASSERT_TRUE(same_multiset(c.blocks, jord));
    const auto vs = validate_order(c, target);
    ASSERT_TRUE(vs.empty()) << "target (" << a0 << "," << b0 << "): " << to_string(vs[0].kind) << " "
                            << vs[0].detail;
    ++checked;
  }
  EXPECT_EQ(checked, 4000);
}

TEST(CanonicalOrder, InsertionKeepsPropertyP) {
  std::mt19937 gen(22);
  std::uniform_int_distribution<int> d(1, 9), len(0, 6);
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<JordanBlock> jord;
    const int n = len(gen);
    for (int k = 0; k < n; ++k) jord.push_back(blk("r", d(gen), d(gen)));
    std::stable_sort(jord.begin(), jord.end(), canonical_less);
    ASSERT_TRUE(check_property_p(jord).empty());
    const JordanBlock extra = blk("r", d(gen), d(gen));
    auto at = std::upper_bound(jord.begin(), jord.end(), extra, canonical_less);
    jord.insert(at, extra);
    ASSERT_TRUE(check_property_p(jord).empty());
  }
}

}  // namespace
}  // namespace arthur
