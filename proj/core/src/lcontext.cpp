#include "arthur/lcontext.hpp"

#include "arthur/error.hpp"

namespace arthur {

namespace {

LContext::Pair normalized(const LContext::Pair& p) {
  return p.first <= p.second ? p : LContext::Pair{p.second, p.first};
}

}  // namespace

std::string_view to_string(CentralValue v) {
  switch (v) {
    case CentralValue::Nonzero: return "nonzero";
    case CentralValue::Zero: return "zero";
    case CentralValue::Unknown: return "unknown";
  }
  return "unknown";
}

LContext::LContext(std::set<std::string, std::less<>> universe,
                   std::set<std::string, std::less<>> rg_pole_at_1,
                   const std::vector<Pair>& central_nonvanishing,
                   const std::vector<Pair>& central_vanishing)
    : universe_(std::move(universe)), rg_pole_at_1_(std::move(rg_pole_at_1)) {
  for (const auto& id : rg_pole_at_1_) require(id);
  for (const auto& p : central_nonvanishing) {
    require(p.first);
    require(p.second);
    nonvanishing_.insert(normalized(p));
  }
  for (const auto& p : central_vanishing) {
    require(p.first);
    require(p.second);
    auto n = normalized(p);
    if (nonvanishing_.contains(n)) {
      throw Error("L(" + n.first + " x " + n.second + ", 1/2) declared both zero and nonzero");
    }
    vanishing_.insert(n);
  }
}

void LContext::require(std::string_view id) const {
  if (!universe_.contains(id)) throw Error("unknown label '" + std::string(id) + "'");
}

bool LContext::rg_pole_at_1(std::string_view rho) const {
  require(rho);
  return rg_pole_at_1_.contains(rho);
}

CentralValue LContext::query_central(std::string_view rho, std::string_view rho_prime) const {
  require(rho);
  require(rho_prime);
  auto key = normalized(Pair{std::string(rho), std::string(rho_prime)});
  if (nonvanishing_.contains(key)) return CentralValue::Nonzero;
  if (vanishing_.contains(key)) return CentralValue::Zero;
  return CentralValue::Unknown;
}

}  // namespace arthur
