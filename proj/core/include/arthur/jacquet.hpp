#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arthur/half_int.hpp"
#include "arthur/jordan.hpp"
#include "arthur/rational.hpp"

namespace arthur {

/// Jac_{x₁} then Jac_{x₂} ... along ρ.
struct JacSequence {
  std::string rho;
  std::vector<HalfInt> exponents;

  friend bool operator==(const JacSequence&, const JacSequence&) = default;
};

/// Jac_x and Jac_y commute when |x − y| > 1.
constexpr bool jac_commute(HalfInt x, HalfInt y) {
  return (x - y).abs() > HalfInt::from_int(1);
}

/// Lexicographically least word obtainable by swapping adjacent commuting
/// exponents.
JacSequence jac_normal_form(const JacSequence& seq);
std::vector<HalfInt> jac_normal_form(const std::vector<HalfInt>& word);

/// [from, to], walking by ±1. Throws arthur::Error on construction when
/// from − to is not integral.
class Segment {
 public:
  Segment(HalfInt from, HalfInt to);

  HalfInt from() const { return from_; }
  HalfInt to() const { return to_; }
  HalfInt lo() const { return from_ < to_ ? from_ : to_; }
  HalfInt hi() const { return from_ < to_ ? to_ : from_; }
  std::size_t length() const;
  /// from, from ± 1, ..., to.
  std::vector<HalfInt> entries() const;
  bool contains(HalfInt x) const { return halfint_in_segment(x, from_, to_); }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  HalfInt from_;
  HalfInt to_;
};

std::string to_string(const Segment& s);

/// Necessary condition for Jac_{x,...,y} π ≠ 0 on some π in the packet of
/// ψ, with x = seg.from(), y = seg.to(): some chain of ρ-blocks has
/// ζ₁B₁ = x, B_{i+1} ≤ A_i + 1 and A_v ≥ |y|. False proves vanishing on the
/// whole packet; true decides nothing.
bool jac_nonvanishing_necessary(const ArthurParameter& psi, std::string_view rho,
                                const Segment& seg);

enum class Irreducibility { Irreducible, Unknown };
std::string_view to_string(Irreducibility v);

/// Sufficient test for ρ|·|^x ⋊ π irreducible on the whole packet: every
/// ρ-block has A < |x| − 1 or B > |x|. Throws arthur::Error when x = 0.
Irreducibility irreducible_cuspidal_twist(const ArthurParameter& psi, std::string_view rho,
                                          HalfInt x);

/// Same integrality class, the union of entries is a segment, and neither
/// entry set contains the other.
bool segments_linked(const Segment& d1, const Segment& d2);

struct SegmentSplit {
  HalfInt delta;
  HalfInt delta_prime;
  Segment lower;
  Segment upper;
};

/// [−(b−1)/2, (b−1)/2] = [−(b−1)/2, −δ_b] ⊔ [δ′_b, (b−1)/2] with
/// (δ_b, δ′_b) = (0, 1) for odd b and (1/2, 1/2) for even b. Throws
/// arthur::Error when b < 2.
SegmentSplit split_segment(int b);

/// Irreducible when ρ ≄ ρ′, when (a+b)/2 + x − (a′+b′)/2 − x′ ∉ ℤ, or when
/// |y + z − (y′ + z′)| < 1.
Irreducibility speh_pair_irreducible(bool rho_eq, bool half_sum_diff_integral,
                                     const Rational& y_plus_z, const Rational& y_plus_z_prime);

}  // namespace arthur
