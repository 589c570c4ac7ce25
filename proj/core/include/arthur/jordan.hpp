#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arthur/half_int.hpp"
#include "arthur/labels.hpp"
#include "arthur/rational.hpp"
#include "arthur/sign.hpp"

namespace arthur {

/// Coordinates (A, B, ζ) of a Jordan block: A = (a+b)/2 − 1, B = |a−b|/2,
/// ζ the sign of a − b (+ when a = b).
struct Quadruple {
  HalfInt A;
  HalfInt B;
  Sign zeta = Sign::Plus;

  /// ζ·B, the exponent a Jacquet chain starts from.
  HalfInt signed_b() const { return zeta == Sign::Plus ? B : -B; }

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

Quadruple to_quadruple(int a, int b);

struct BlockDims {
  int a;
  int b;
  friend bool operator==(const BlockDims&, const BlockDims&) = default;
};

/// Inverse of to_quadruple. Throws arthur::Error unless A ≥ B ≥ 0, A − B is
/// integral and ζ = + whenever B = 0.
BlockDims from_quadruple(HalfInt A, HalfInt B, Sign zeta);

/// An irreducible constituent ρ|·|^x ⊗ sp_a ⊗ sp_b of a parameter.
struct JordanBlock {
  std::string rho;
  int a = 1;
  int b = 1;
  /// Nonunitary exponent x; zero for unitary blocks.
  Rational twist{0};

  bool is_unitary() const { return twist.numerator() == 0; }
  Quadruple quadruple() const { return to_quadruple(a, b); }
  /// a·b, the dimension contributed per unit of dim ρ.
  int weight() const { return a * b; }

  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// Lexicographic on (rho, a, b, twist); used to canonicalize multisets.
bool block_less(const JordanBlock& x, const JordanBlock& y);

/// Multiset equality.
bool same_multiset(std::span<const JordanBlock> x, std::span<const JordanBlock> y);

struct ArthurParameter {
  GroupType group;
  std::vector<JordanBlock> blocks;
};

/// Parity of ρ ⊗ sp_a ⊗ sp_b; sp_k is symplectic iff k is even. Throws
/// arthur::Error when ρ is not self-dual or has undeclared parity.
Parity block_parity(const JordanBlock& block, const LabelUniverse& labels);

/// True iff the block is unitary, ρ is self-dual and ρ ⊗ sp_a ⊗ sp_b has the
/// parity of the dual group. Throws arthur::Error for a self-dual label whose
/// parity was never declared.
bool good_parity(const JordanBlock& block, const GroupType& group,
                 const LabelUniverse& labels);

/// ψ = ψ_bp ⊕ ψ_mp ⊕ ψ_nu, keeping one half of each dual pair.
struct Decomposition {
  std::vector<JordanBlock> bp;
  /// One representative per dual pair of unitary bad-parity blocks.
  std::vector<JordanBlock> mp_half;
  /// The twist > 0 member of each nonunitary dual pair.
  std::vector<JordanBlock> nu_pos;
};

/// Throws arthur::Error when a block that is not good parity has no dual
/// twin (the parameter would not factor through the dual group).
Decomposition decompose(const ArthurParameter& psi, const LabelUniverse& labels);

/// Positional domination test: gt[i] must be base[i] shifted by T[i] ≥ 0 in
/// both A and B with ρ and ζ preserved. Returns T, or nullopt when no such
/// shift exists. Throws arthur::Error when the sizes differ.
///
/// The caller is responsible for `base` being listed in an order satisfying
/// property P; the position-wise matching is what the order fixes.
std::optional<std::vector<std::int64_t>> dominates(std::span<const JordanBlock> gt,
                                                   std::span<const JordanBlock> base);

enum class ViolationKind {
  DimensionMismatch,
  UnpairedBlock,
  TwistOutOfRange,
  UnknownLabel,
  InvalidBlock,
  UndeclaredParity,
};

std::string_view to_string(ViolationKind k);

struct ParameterViolation {
  ViolationKind kind;
  /// Offending block index, when the violation is about a single block.
  std::optional<std::size_t> block;
  std::string detail;
};

/// How to treat nonunitary twists with |x| ≥ 1/2. Arthur packets only need
/// |x| < 1/2; Allow lets exploratory inputs through.
enum class TwistPolicy { Reject, Allow };

/// Checks Σ a·b·dim ρ = m*_G, that every block outside good parity has its
/// dual twin, and block sanity. Never throws; an empty result means valid.
std::vector<ParameterViolation> validate_parameter(const ArthurParameter& psi,
                                                   const LabelUniverse& labels,
                                                   TwistPolicy policy = TwistPolicy::Reject);

}  // namespace arthur
