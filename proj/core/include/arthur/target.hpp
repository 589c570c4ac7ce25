#pragma once

#include <optional>
#include <string>

#include "arthur/jordan.hpp"

namespace arthur {

/// The block (ρ, a₀, b₀−2) that ψ must contain, in the coordinates used by
/// the order conditions: A′₀ = A₀ − 1, B′₀ = |a₀−b₀+2|/2, ζ′₀ = sign of
/// a₀ − b₀ + 2 with the convention ζ′₀ = − when a₀ = b₀ − 2. Absent when
/// b₀ = 2. Throws arthur::Error if a₀ < 1 or b₀ < 2.
std::optional<Quadruple> derive_prime_block(int a0, int b0);

/// (ρ, a₀, b₀): the intertwining operator for St(ρ,a₀)|·|^s at
/// s₀ = (b₀−1)/2.
struct TargetTriple {
  std::string rho;
  int a0 = 1;
  int b0 = 2;

  /// Throws arthur::Error if a₀ < 1 or b₀ < 2.
  static TargetTriple make(std::string rho, int a0, int b0);

  Quadruple quad() const { return to_quadruple(a0, b0); }
  std::optional<Quadruple> prime_quad() const { return derive_prime_block(a0, b0); }
  bool has_prime() const { return b0 > 2; }
  /// a₀ = b₀ − 1 with b₀ > 2: ζ₀ = −, ζ′₀ = +, B₀ = B′₀ = 1/2.
  bool is_exceptional() const { return b0 > 2 && a0 == b0 - 1; }
  HalfInt s0() const { return HalfInt::from_doubled(b0 - 1); }

  /// The block replaced in ψ, i.e. (ρ, a₀, b₀−2).
  JordanBlock prime_block() const { return JordanBlock{rho, a0, b0 - 2, Rational{0}}; }
  /// The block of ψ⁺, i.e. (ρ, a₀, b₀).
  JordanBlock plus_block() const { return JordanBlock{rho, a0, b0, Rational{0}}; }
};

}  // namespace arthur
