#include <gtest/gtest.h>

#include <map>
#include <random>

#include "arthur/error.hpp"
#include "arthur/jordan.hpp"

namespace arthur {
namespace {

HalfInt h(std::int64_t doubled) { return HalfInt::from_doubled(doubled); }

LabelUniverse universe() {
  return LabelUniverse({{"o", 1, true, Parity::Orthogonal, ""},
                        {"o2", 2, true, Parity::Orthogonal, ""},
                        {"s", 2, true, Parity::Symplectic, ""},
                        {"n", 1, true, Parity::None, ""},
                        {"c", 1, false, Parity::None, "cd"},
                        {"cd", 1, false, Parity::None, "c"}});
}

TEST(Quadruple, Examples) {
  EXPECT_EQ(to_quadruple(3, 1), (Quadruple{h(2), h(2), Sign::Plus}));
  EXPECT_EQ(to_quadruple(1, 3), (Quadruple{h(2), h(2), Sign::Minus}));
  EXPECT_EQ(to_quadruple(2, 2), (Quadruple{h(2), h(0), Sign::Plus}));
  EXPECT_EQ(from_quadruple(h(2), h(2), Sign::Plus), (BlockDims{3, 1}));
  EXPECT_EQ(from_quadruple(h(2), h(0), Sign::Plus), (BlockDims{2, 2}));
  EXPECT_EQ(from_quadruple(h(5), h(1), Sign::Minus), (BlockDims{3, 4}));
}

TEST(Quadruple, RoundTripAndInvariants) {
  for (int a = 1; a <= 50; ++a) {
    for (int b = 1; b <= 50; ++b) {
      const Quadruple q = to_quadruple(a, b);
      ASSERT_EQ(from_quadruple(q.A, q.B, q.zeta), (BlockDims{a, b}));
      ASSERT_GE(q.A, q.B);
      ASSERT_TRUE(q.A.same_class(q.B));
      ASSERT_EQ(q.A + q.B, HalfInt::from_int(std::max(a, b) - 1));
    }
  }
}

TEST(Quadruple, RejectsInvalid) {
  EXPECT_THROW(from_quadruple(h(1), h(2), Sign::Plus), Error);
  EXPECT_THROW(from_quadruple(h(2), h(1), Sign::Plus), Error);
  EXPECT_THROW(from_quadruple(h(2), h(0), Sign::Minus), Error);
}

TEST(GoodParity, Examples) {
  const auto u = universe();
  const GroupType so{GroupKind::SOodd, 2, Sign::Plus};
  const GroupType sp{GroupKind::Sp, 1, Sign::Plus};
  EXPECT_TRUE(good_parity({"o", 2, 1, Rational(0)}, so, u));
  EXPECT_FALSE(good_parity({"o", 1, 1, Rational(0)}, so, u));
  EXPECT_FALSE(good_parity({"c", 2, 1, Rational(0)}, so, u));
  EXPECT_TRUE(good_parity({"o", 1, 1, Rational(0)}, sp, u));
  EXPECT_TRUE(good_parity({"s", 1, 2, Rational(0)}, sp, u));
  EXPECT_FALSE(good_parity({"o", 2, 1, Rational(1, 4)}, so, u));
  EXPECT_THROW(good_parity({"n", 1, 1, Rational(0)}, sp, u), Error);
}

TEST(GoodParity, SymmetricInAB) {
  const auto u = universe();
  for (auto kind : {GroupKind::SOodd, GroupKind::Sp, GroupKind::Oeven}) {
    const GroupType g{kind, 1, Sign::Plus};
    for (const char* rho : {"o", "s"}) {
      for (int a = 1; a <= 8; ++a) {
        for (int b = 1; b <= 8; ++b) {
          EXPECT_EQ(good_parity({rho, a, b, Rational(0)}, g, u), good_parity({rho, b, a, Rational(0)}, g, u));
        }
      }
    }
  }
}

TEST(Decompose, Examples) {
  const auto u = universe();
  const GroupType so{GroupKind::SOodd, 6, Sign::Plus};
  {
    ArthurParameter psi{so, {{"o", 2, 1, Rational(0)}, {"o", 4, 1, Rational(0)}}};
    const auto d = decompose(psi, u);
    EXPECT_EQ(d.bp.size(), 2u);
    EXPECT_TRUE(d.mp_half.empty());
    EXPECT_TRUE(d.nu_pos.empty());
  }
  {
    ArthurParameter psi{so, {{"c", 2, 1, Rational(1, 4)}, {"cd", 2, 1, Rational(-1, 4)}}};
    const auto d = decompose(psi, u);
    ASSERT_EQ(d.nu_pos.size(), 1u);
    EXPECT_EQ(d.nu_pos[0], (JordanBlock{"c", 2, 1, Rational(1, 4)}));
  }
  {
    ArthurParameter psi{so, {{"o", 1, 1, Rational(0)}, {"o", 1, 1, Rational(0)}}};
    const auto d = decompose(psi, u);
    ASSERT_EQ(d.mp_half.size(), 1u);
    EXPECT_EQ(d.mp_half[0], (JordanBlock{"o", 1, 1, Rational(0)}));
  }
  {
    ArthurParameter psi{so, {{"c", 1, 1, Rational(0)}, {"cd", 1, 1, Rational(0)}}};
    const auto d = decompose(psi, u);
    ASSERT_EQ(d.mp_half.size(), 1u);
    EXPECT_EQ(d.mp_half[0].rho, "c");
  }
  EXPECT_THROW(decompose({so, {{"c", 2, 1, Rational(1, 4)}}}, u), Error);
  EXPECT_THROW(decompose({so, {{"o", 1, 1, Rational(0)}}}, u), Error);
}

// Pairing oracle: a multiset splits into bp plus dual pairs iff every
// non-good-parity block can be matched with a distinct twin.
TEST(Decompose, PartitionsTheMultiset) {
  const auto u = universe();
  const GroupType so{GroupKind::SOodd, 1, Sign::Plus};
  std::mt19937 gen(7);
  const std::vector<JordanBlock> pool{
      {"o", 2, 1, Rational(0)}, {"o", 1, 1, Rational(0)}, {"s", 1, 1, Rational(0)},
      {"c", 1, 2, Rational(0)}, {"cd", 1, 2, Rational(0)}, {"c", 2, 1, Rational(1, 3)},
      {"cd", 2, 1, Rational(-1, 3)}};
  int decomposed = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<JordanBlock> blocks;
    const int n = std::uniform_int_distribution<int>(0, 6)(gen);
    for (int k = 0; k < n; ++k) blocks.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(gen)]);
    const ArthurParameter psi{so, blocks};

    std::map<std::tuple<std::string, int, int, Rational>, int> bad;
    for (const auto& b : blocks) {
      if (!good_parity(b, so, u)) ++bad[{b.rho, b.a, b.b, b.twist}];
    }
    bool pairable = true;
    for (const auto& [k, c] : bad) {
      const auto& [rho, a, bb, x] = k;
      auto twin = std::make_tuple(u.dual_of(rho), a, bb, -x);
      const int tc = bad.contains(twin) ? bad.at(twin) : 0;
      if (twin == k ? c % 2 != 0 : tc != c) pairable = false;
    }
    if (!pairable) {
      EXPECT_THROW(decompose(psi, u), Error);
      continue;
    }
    const auto d = decompose(psi, u);
    ++decomposed;
    EXPECT_EQ(d.bp.size() + 2 * d.mp_half.size() + 2 * d.nu_pos.size(), blocks.size());
    for (const auto& b : d.nu_pos) EXPECT_GT(b.twist, Rational(0));
  }
  EXPECT_GT(decomposed, 100);
}

TEST(Dominates, Examples) {
  const std::vector<JordanBlock> base{{"o", 2, 2, Rational(0)}};
  EXPECT_EQ(dominates(base, base), (std::vector<std::int64_t>{0}));
  // (A, B) = (1, 0) shifted by 2 is (3, 2, +), i.e. (a, b) = (6, 2).
  const std::vector<JordanBlock> gt{{"o", 6, 2, Rational(0)}};
  EXPECT_EQ(dominates(gt, base), (std::vector<std::int64_t>{2}));
  const std::vector<JordanBlock> flipped{{"o", 2, 6, Rational(0)}};
  EXPECT_EQ(dominates(flipped, base), std::nullopt);
  const std::vector<JordanBlock> two{base[0], base[0]};
  EXPECT_THROW(dominates(two, base), Error);
}

TEST(ValidateParameter, Examples) {
  const auto u = universe();
  // (o,1,2) is symplectic, bad parity for Sp; two copies pair up.
  ArthurParameter ok{{GroupKind::Sp, 7, Sign::Plus},
                     {{"o", 3, 1, Rational(0)}, {"o", 1, 2, Rational(0)}, {"o", 1, 2, Rational(0)}}};
  EXPECT_TRUE(validate_parameter(ok, u).empty());
  ok.blocks.pop_back();
  ok.group.m_star = 5;
  auto lone = validate_parameter(ok, u);
  ASSERT_EQ(lone.size(), 1u);
  EXPECT_EQ(lone[0].kind, ViolationKind::UnpairedBlock);

  ArthurParameter short_dim{{GroupKind::Sp, 5, Sign::Plus}, {{"o", 3, 1, Rational(0)}, {"o", 1, 1, Rational(0)}}};
  auto v = validate_parameter(short_dim, u);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::DimensionMismatch);

  ArthurParameter unpaired{{GroupKind::Sp, 5, Sign::Plus},
                           {{"o", 3, 1, Rational(0)}, {"c", 2, 1, Rational(1, 4)}}};
  v = validate_parameter(unpaired, u);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::UnpairedBlock);
  EXPECT_EQ(v[0].block, 1u);
}

TEST(ValidateParameter, TwistPolicyAndLabels) {
  const auto u = universe();
  ArthurParameter wide{{GroupKind::Sp, 4, Sign::Plus},
                       {{"c", 2, 1, Rational(3, 4)}, {"cd", 2, 1, Rational(-3, 4)}}};
  auto v = validate_parameter(wide, u);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].kind, ViolationKind::TwistOutOfRange);
  EXPECT_TRUE(validate_parameter(wide, u, TwistPolicy::Allow).empty());

  ArthurParameter unknown{{GroupKind::Sp, 1, Sign::Plus}, {{"zz", 1, 1, Rational(0)}}};
  v = validate_parameter(unknown, u);
  EXPECT_EQ(v[0].kind, ViolationKind::UnknownLabel);

  ArthurParameter undeclared{{GroupKind::Sp, 1, Sign::Plus}, {{"n", 1, 1, Rational(0)}}};
  v = validate_parameter(undeclared, u);
  EXPECT_EQ(v[0].kind, ViolationKind::UndeclaredParity);
}

}  // namespace
}  // namespace arthur
