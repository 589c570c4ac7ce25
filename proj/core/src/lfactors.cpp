#include "arthur/lfactors.hpp"

#include <cstdlib>

#include "arthur/error.hpp"

namespace arthur {

std::vector<HalfInt> lfactor_shifts(int a0, int a) {
  if (a0 < 1 || a < 1) throw Error("lfactor_shifts needs a0, a >= 1");
  std::vector<HalfInt> out;
  for (int d = std::abs(a - a0); d <= a + a0 - 2; d += 2) out.push_back(HalfInt::from_doubled(d));
  return out;
}

int pole_contribution_table(const Quadruple& block, const Quadruple& target) {
  const auto& [A, B, zeta] = block;
  const auto& [A0, B0, zeta0] = target;
  if (zeta0 == Sign::Plus) {
    if (zeta == Sign::Plus) return B <= B0 && B0 <= A0 && A0 <= A;
    return B <= A0 && A0 <= A;
  }
  if (zeta == Sign::Plus) return 0;
  return B0 <= B && B <= A0 && A0 <= A;
}

int pole_contribution_interval(int a, int b, int a0, int b0) {
  // Doubled: b − b₀ ∈ [|a − a₀|, a + a₀ − 2].
  const int x = b - b0;
  return std::abs(a - a0) <= x && x <= a + a0 - 2;
}

namespace {

void check_args(int a0, HalfInt s0) {
  if (s0 <= HalfInt{}) throw Error("r_order needs s0 > 0");
  if (a0 < 1) throw Error("r_order needs a0 >= 1");
}

}  // namespace

int r_order(const ArthurParameter& psi, std::string_view rho, int a0, HalfInt s0) {
  check_args(a0, s0);
  const int b0 = static_cast<int>(s0.doubled()) + 1;
  int order = 0;
  for (const auto& block : psi.blocks) {
    if (block.rho != rho) continue;
    if (!block.is_unitary()) throw Error("r_order: nonunitary block for '" + block.rho + "'");
    order -= pole_contribution_interval(block.a, block.b, a0, b0);
  }
  return order;
}

int r_order(const ArthurParameter& psi, std::string_view rho, int a0, const Rational& s0) {
  if (s0 <= Rational(0)) throw Error("r_order needs s0 > 0");
  if (!is_half_integer(s0)) {
    check_args(a0, HalfInt::from_int(1));
    return 0;
  }
  return r_order(psi, rho, a0, to_half_int(s0));
}

std::vector<std::size_t> pole_contributors(std::span<const JordanBlock> blocks,
                                           std::string_view rho, int a0, int b0) {
  const Quadruple target = to_quadruple(a0, b0);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& block = blocks[i];
    if (block.rho != rho || !block.is_unitary()) continue;
    if (pole_contribution_table(block.quadruple(), target)) out.push_back(i);
  }
  return out;
}

}  // namespace arthur
