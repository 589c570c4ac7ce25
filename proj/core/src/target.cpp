#include "arthur/target.hpp"

#include <cstdlib>

#include "arthur/error.hpp"

namespace arthur {

std::optional<Quadruple> derive_prime_block(int a0, int b0) {
  if (a0 < 1 || b0 < 2) throw Error("target needs a0 >= 1 and b0 >= 2");
  if (b0 == 2) return std::nullopt;
  Quadruple q = to_quadruple(a0, b0 - 2);
  if (a0 == b0 - 2) q.zeta = Sign::Minus;
  return q;
}

TargetTriple TargetTriple::make(std::string rho, int a0, int b0) {
  if (a0 < 1 || b0 < 2) throw Error("target needs a0 >= 1 and b0 >= 2");
  return TargetTriple{std::move(rho), a0, b0};
}

}  // namespace arthur
