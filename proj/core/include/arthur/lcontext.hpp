#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arthur {

enum class CentralValue { Nonzero, Zero, Unknown };

std::string_view to_string(CentralValue v);

/// Declared global L-function facts. Nothing here is ever computed: the
/// caller states which L(ρ, r_G, s) have a pole at s = 1 and which central
/// values L(ρ×ρ′, 1/2) vanish or not. Undeclared pairs stay Unknown.
class LContext {
 public:
  using Pair = std::pair<std::string, std::string>;

  LContext() = default;
  /// Throws arthur::Error when a fact names a label outside `universe` or a
  /// pair is declared both vanishing and nonvanishing.
  LContext(std::set<std::string, std::less<>> universe,
           std::set<std::string, std::less<>> rg_pole_at_1,
           const std::vector<Pair>& central_nonvanishing,
           const std::vector<Pair>& central_vanishing);

  /// Throws arthur::Error for an id outside the universe.
  bool rg_pole_at_1(std::string_view rho) const;

  /// Symmetric in its arguments. Throws arthur::Error for undeclared ids.
  CentralValue query_central(std::string_view rho, std::string_view rho_prime) const;

  const std::set<std::string, std::less<>>& universe() const { return universe_; }
  const std::set<std::string, std::less<>>& rg_poles() const { return rg_pole_at_1_; }
  /// Normalized (first ≤ second) declarations, sorted.
  const std::set<Pair>& nonvanishing() const { return nonvanishing_; }
  const std::set<Pair>& vanishing() const { return vanishing_; }

 private:
  void require(std::string_view id) const;

  std::set<std::string, std::less<>> universe_;
  std::set<std::string, std::less<>> rg_pole_at_1_;
  std::set<Pair> nonvanishing_;
  std::set<Pair> vanishing_;
};

}  // namespace arthur
