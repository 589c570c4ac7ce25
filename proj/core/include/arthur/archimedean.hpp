#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arthur/half_int.hpp"

namespace arthur {

/// One (δ, b) of a real parameter. a_δ = 1: δ is a quadratic character;
/// a_δ ≥ 2: δ is the discrete series of GL(2, ℝ) with infinitesimal
/// character ±(a_δ − 1)/2.
struct ArchBlock {
  int a_delta = 1;
  int b = 1;
  /// Langlands-quotient bookkeeping carried for round-trips only.
  std::optional<int> ell;

  friend bool operator==(const ArchBlock&, const ArchBlock&) = default;
};

/// Infinitesimal character as a sorted multiset (descending).
struct InfChar {
  std::vector<HalfInt> entries;

  friend bool operator==(const InfChar&, const InfChar&) = default;
};

/// ∪ over blocks of ±(a_δ−1)/2 + [(b−1)/2, −(b−1)/2]; one segment when
/// a_δ = 1. Throws arthur::Error for a_δ < 1 or b < 1.
InfChar inf_char(std::span<const ArchBlock> blocks);

/// inf_char(ψ) plus ±(a_τ−1)/2 + s₀ and the negatives of those. For a_τ = 1
/// the two τ entries coincide and are counted once, as is the negative.
/// Throws arthur::Error when s₀ ≤ 0 or a_τ < 1.
InfChar combined_inf_char(std::span<const ArchBlock> psi, int a_tau, HalfInt s0);

/// Several τ-components at once.
InfChar combined_inf_char(std::span<const ArchBlock> psi, std::span<const int> a_taus,
                          HalfInt s0);

/// No entry repeats.
bool is_regular(const InfChar& chi);

/// Order at s₀ of Γ(s−(b−1)/2+|a_τ−a_δ|/2)·Γ(s−(b−1)/2+(a_τ+a_δ)/2−1), with
/// one factor dropped when a_τ = 1 or a_δ = 1. In {0, −1, −2}. Throws
/// arthur::Error when a_τ, a_δ or b is < 1.
int arch_lfactor_order(int a_tau, int a_delta, int b, HalfInt s0);

/// Σ of arch_lfactor_order over τ-components and ψ blocks. The
/// denominators and the r_G factor have neither pole nor zero at s₀ > 0.
/// Throws arthur::Error when s₀ ≤ 0.
int normalization_order(std::span<const int> a_taus, std::span<const ArchBlock> psi,
                        HalfInt s0);

}  // namespace arthur
