#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "arthur/eisenstein.hpp"
#include "arthur/error.hpp"

namespace arthur {
namespace {

LContext context() {
  return LContext({"r", "q", "p"}, {"r"}, {{"r", "p"}}, {{"r", "q"}});
}

TEST(PoleConditions, Examples) {
  const LContext ctx = context();
  auto c = global_pole_conditions({{{"r", 3}}}, "r", Rational(2), ctx);
  EXPECT_TRUE(c.cond1);
  EXPECT_EQ(c.cond2, Tribool::True);

  c = global_pole_conditions({{{"r", 3}, {"q", 3}}}, "r", Rational(3, 2), ctx);
  EXPECT_FALSE(c.cond1);
  EXPECT_EQ(c.cond2, Tribool::False);
  EXPECT_EQ(eisenstein_verdict({{{"r", 3}, {"q", 3}}}, "r", Rational(3, 2), ctx).kind,
            VerdictKind::Holomorphic);

  c = global_pole_conditions({{{"q", 2}}}, "r", Rational(1, 2), ctx);
  EXPECT_TRUE(c.cond1);
  EXPECT_EQ(c.cond2, Tribool::True);
  c = global_pole_conditions({}, "q", Rational(1, 2), ctx);
  EXPECT_FALSE(c.cond1);

  // Off ½ℤ nothing holds.
  c = global_pole_conditions({{{"r", 3}}}, "r", Rational(4, 3), ctx);
  EXPECT_FALSE(c.cond1);
  EXPECT_EQ(c.cond2, Tribool::False);

  EXPECT_THROW(global_pole_conditions({}, "r", Rational(1, 4), ctx), Error);
  EXPECT_THROW(global_pole_conditions({{{"zz", 1}}}, "r", Rational(1), ctx), Error);
}

TEST(Verdict, Logic) {
  const LContext ctx = context();
  // (true, true)
  auto v = eisenstein_verdict({{{"r", 1}, {"p", 2}}}, "r", Rational(1), ctx);
  EXPECT_EQ(v.kind, VerdictKind::PoleOrderAtMostOne);
  EXPECT_EQ(v.assumptions.size(), 1u);
  // (true, Unknown): p × r is declared, r × r is not.
  v = eisenstein_verdict({{{"r", 1}, {"r", 2}}}, "r", Rational(1), ctx);
  EXPECT_TRUE(v.reasons.cond1);
  EXPECT_EQ(v.reasons.cond2, Tribool::Unknown);
  EXPECT_EQ(v.kind, VerdictKind::Holomorphic);
  // (false, true)
  v = eisenstein_verdict({{{"r", 3}}}, "r", Rational(1), ctx);
  EXPECT_EQ(v.kind, VerdictKind::Holomorphic);

  const Hypotheses hyp{Tribool::True, Tribool::False, Tribool::Unknown};
  v = eisenstein_verdict({}, "r", Rational(1, 2), ctx, hyp);
  EXPECT_EQ(v.hypotheses.regular_infinitesimal_character, Tribool::True);
  EXPECT_EQ(v.hypotheses.cohomological, Tribool::False);
}

TEST(Residue, Logic) {
  const LContext ctx = context();
  const auto pole = eisenstein_verdict({{{"r", 1}}}, "r", Rational(1), ctx);
  ASSERT_EQ(pole.kind, VerdictKind::PoleOrderAtMostOne);
  const auto hol = eisenstein_verdict({}, "r", Rational(1), ctx);
  EXPECT_EQ(residue_verdict(hol, {Tribool::True}), ResidueVerdict::NoResidue);
  EXPECT_EQ(residue_verdict(pole, {Tribool::True, Tribool::True}), ResidueVerdict::ResidueIsPiPlus);
  EXPECT_EQ(residue_verdict(pole, {Tribool::True, Tribool::Unknown}), ResidueVerdict::Undetermined);
  EXPECT_EQ(residue_verdict(pole, {Tribool::Unknown, Tribool::False}), ResidueVerdict::NoResidue);
  EXPECT_EQ(residue_verdict(pole, {}), ResidueVerdict::ResidueIsPiPlus);
}

GlobalJord random_jord(std::mt19937& gen) {
  static const char* ids[] = {"r", "q", "p"};
  std::uniform_int_distribution<int> id(0, 2), b(1, 6), len(0, 5);
  GlobalJord j;
  const int n = len(gen);
  for (int k = 0; k < n; ++k) j.pairs.push_back({ids[id(gen)], b(gen)});
  return j;
}

TEST(Verdict, PermutationInvariant) {
  const LContext ctx = context();
  std::mt19937 gen(61);
  std::uniform_int_distribution<int> s(1, 8);
  for (int iter = 0; iter < 500; ++iter) {
    GlobalJord j = random_jord(gen);
    const Rational s0(s(gen), 2);
    const auto before = global_pole_conditions(j, "r", s0, ctx);
    std::shuffle(j.pairs.begin(), j.pairs.end(), gen);
    const auto after = global_pole_conditions(j, "r", s0, ctx);
    ASSERT_EQ(before.cond1, after.cond1);
    ASSERT_EQ(before.cond2, after.cond2);
  }
}

// Adding a pair never destroys cond1 and never improves cond2.
TEST(Verdict, MonotoneInJord) {
  const LContext ctx = context();
  std::mt19937 gen(62);
  std::uniform_int_distribution<int> s(1, 8);
  auto rank = [](Tribool t) { return t == Tribool::True ? 2 : t == Tribool::Unknown ? 1 : 0; };
  for (int iter = 0; iter < 500; ++iter) {
    GlobalJord j = random_jord(gen);
    const Rational s0(s(gen), 2);
    const auto before = global_pole_conditions(j, "r", s0, ctx);
    const GlobalJord extra = random_jord(gen);
    j.pairs.push_back(extra.pairs.empty() ? GlobalPair{"q", 1} : extra.pairs.front());
    const auto after = global_pole_conditions(j, "r", s0, ctx);
    ASSERT_TRUE(!before.cond1 || after.cond1);
    ASSERT_LE(rank(after.cond2), rank(before.cond2));
  }
}

}  // namespace
}  // namespace arthur
