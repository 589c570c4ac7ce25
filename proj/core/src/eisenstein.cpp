#include "arthur/eisenstein.hpp"

#include "arthur/error.hpp"

namespace arthur {

PoleConditions global_pole_conditions(const GlobalJord& jord, std::string_view rho,
                                      const Rational& s0, const LContext& ctx) {
  if (s0 < Rational(1, 2)) throw Error("global pole conditions need s0 >= 1/2");
  for (const auto& p : jord.pairs) {
    if (!ctx.universe().contains(p.rho)) throw Error("unknown label '" + p.rho + "'");
  }
  const bool rho_pole = ctx.rg_pole_at_1(rho);
  if (!is_half_integer(s0)) return {false, Tribool::False};

  const HalfInt s = to_half_int(s0);
  const std::int64_t two_s = s.doubled();
  PoleConditions out;
  if (two_s == 1) {
    out.cond1 = rho_pole;
  } else {
    for (const auto& p : jord.pairs) {
      if (p.rho == rho && p.b == two_s - 1) out.cond1 = true;
    }
  }
  out.cond2 = Tribool::True;
  for (const auto& p : jord.pairs) {
    if (p.b != two_s) continue;
    switch (ctx.query_central(rho, p.rho)) {
      case CentralValue::Nonzero: break;
      case CentralValue::Zero: out.cond2 = tri_and(out.cond2, Tribool::False); break;
      case CentralValue::Unknown: out.cond2 = tri_and(out.cond2, Tribool::Unknown); break;
    }
  }
  return out;
}

std::string_view to_string(VerdictKind k) {
  return k == VerdictKind::Holomorphic ? "Holomorphic" : "PoleOrderAtMostOne";
}

EisensteinVerdict eisenstein_verdict(const GlobalJord& jord, std::string_view rho,
                                     const Rational& s0, const LContext& ctx,
                                     const Hypotheses& hyp) {
  EisensteinVerdict v;
  v.reasons = global_pole_conditions(jord, rho, s0, ctx);
  v.hypotheses = hyp;
  v.assumptions = {"multiplicity one of the discrete spectrum"};
  if (v.reasons.cond1 && v.reasons.cond2 == Tribool::True) v.kind = VerdictKind::PoleOrderAtMostOne;
  return v;
}

std::string_view to_string(ResidueVerdict r) {
  switch (r) {
    case ResidueVerdict::NoResidue: return "NoResidue";
    case ResidueVerdict::ResidueIsPiPlus: return "ResidueIsPiPlus";
    case ResidueVerdict::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

ResidueVerdict residue_verdict(const EisensteinVerdict& v,
                               const std::vector<Tribool>& local_pi_plus_nonnull) {
  if (v.kind == VerdictKind::Holomorphic) return ResidueVerdict::NoResidue;
  Tribool all = Tribool::True;
  for (Tribool t : local_pi_plus_nonnull) all = tri_and(all, t);
  if (all == Tribool::False) return ResidueVerdict::NoResidue;
  return all == Tribool::True ? ResidueVerdict::ResidueIsPiPlus : ResidueVerdict::Undetermined;
}

}  // namespace arthur
