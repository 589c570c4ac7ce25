#pragma once

#include <string_view>
#include <vector>

#include "arthur/half_int.hpp"
#include "arthur/jordan.hpp"
#include "arthur/rational.hpp"

namespace arthur {

/// The shifts ℓ in L(St(ρ,a₀)×St(ρ,a), s') = Π_ℓ L(ρ×ρ, ℓ + s'):
/// |a−a₀|/2, |a−a₀|/2 + 1, ..., (a+a₀)/2 − 1 (min(a, a₀) values).
std::vector<HalfInt> lfactor_shifts(int a0, int a);

/// Whether a block with coordinates `block` contributes a pole to
/// r(s, ρ, a₀, ψ) at s₀ = (b₀−1)/2, read off the (ζ, ζ₀) table:
///
///   ζ\ζ₀ |        +          |         −
///   -----+-------------------+-------------------
///     +  | B ≤ B₀ ≤ A₀ ≤ A   | never
///     −  | B ≤ A₀ ≤ A        | B₀ ≤ B ≤ A₀ ≤ A
///
/// `target` must come from (a₀, b₀) with b₀ ≥ 2, so ζ₀ = + when B₀ = 0.
int pole_contribution_table(const Quadruple& block, const Quadruple& target);

/// The same decision straight from the shift interval: 1 iff
/// (b−1)/2 − s₀ ∈ [|a−a₀|/2, (a+a₀)/2 − 1] with s₀ = (b₀−1)/2.
int pole_contribution_interval(int a, int b, int a0, int b0);

/// Order at s = s₀ of r(s, ρ, a₀, ψ); ≤ 0, negative means a pole. Only the
/// numerators L(St(ρ,a₀)×St(ρ,a), s−(b−1)/2) of blocks labelled ρ count.
/// Throws arthur::Error if s₀ ≤ 0, a₀ < 1, or a ρ-block is nonunitary.
int r_order(const ArthurParameter& psi, std::string_view rho, int a0, HalfInt s0);

/// As above for an arbitrary rational point; 0 off ½ℤ.
int r_order(const ArthurParameter& psi, std::string_view rho, int a0, const Rational& s0);

/// Indices of the blocks of ψ contributing a pole at s₀ = (b₀−1)/2.
std::vector<std::size_t> pole_contributors(std::span<const JordanBlock> blocks,
                                           std::string_view rho, int a0, int b0);

}  // namespace arthur
