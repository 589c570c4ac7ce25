#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arthur/lcontext.hpp"
#include "arthur/rational.hpp"
#include "arthur/sign.hpp"

namespace arthur {

struct GlobalPair {
  std::string rho;
  int b = 1;
  friend bool operator==(const GlobalPair&, const GlobalPair&) = default;
};

/// Jord(π^GL) of a discrete automorphic representation of GL.
struct GlobalJord {
  std::vector<GlobalPair> pairs;
};

struct PoleConditions {
  bool cond1 = false;
  Tribool cond2 = Tribool::False;
};

/// cond1: s₀ = 1/2 and L(ρ, r_G, s) has a pole at 1, or s₀ ≥ 1 and
/// (ρ, 2s₀−1) ∈ jord. cond2: L(ρ×ρ′, 1/2) ≠ 0 for every (ρ′, 2s₀) ∈ jord,
/// Kleene conjunction. Both false off ½ℤ. Throws arthur::Error when
/// s₀ < 1/2 or an id is not declared in ctx.
PoleConditions global_pole_conditions(const GlobalJord& jord, std::string_view rho,
                                      const Rational& s0, const LContext& ctx);

enum class VerdictKind { Holomorphic, PoleOrderAtMostOne };
std::string_view to_string(VerdictKind k);

/// Caller-asserted global hypotheses, echoed in the verdict and never
/// checked here.
struct Hypotheses {
  Tribool regular_infinitesimal_character = Tribool::Unknown;
  Tribool cohomological = Tribool::Unknown;
  /// The square-integrability side condition the theory suspects redundant.
  Tribool condition6 = Tribool::Unknown;
};

struct EisensteinVerdict {
  VerdictKind kind = VerdictKind::Holomorphic;
  PoleConditions reasons;
  Hypotheses hypotheses;
  /// Assumptions taken on faith, e.g. multiplicity one.
  std::vector<std::string> assumptions;
};

/// PoleOrderAtMostOne exactly when cond1 holds and cond2 is True. An
/// Unknown cond2 gives Holomorphic with the Unknown kept in `reasons`.
EisensteinVerdict eisenstein_verdict(const GlobalJord& jord, std::string_view rho,
                                     const Rational& s0, const LContext& ctx,
                                     const Hypotheses& hyp = {});

enum class ResidueVerdict { NoResidue, ResidueIsPiPlus, Undetermined };
std::string_view to_string(ResidueVerdict r);

/// NoResidue when holomorphic or some place has π⁺ = 0; ResidueIsPiPlus when
/// every place has π⁺ ≠ 0; Undetermined otherwise.
ResidueVerdict residue_verdict(const EisensteinVerdict& v,
                               const std::vector<Tribool>& local_pi_plus_nonnull);

}  // namespace arthur
