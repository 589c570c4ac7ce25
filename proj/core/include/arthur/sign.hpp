#pragma once

#include <cstdint>
#include <string_view>

namespace arthur {

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::Plus : Sign::Minus;
}
constexpr Sign operator-(Sign s) {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}
constexpr int to_int(Sign s) { return static_cast<int>(s); }

/// s^k for k ≥ 0.
constexpr Sign pow(Sign s, long long k) {
  return (s == Sign::Plus || k % 2 == 0) ? Sign::Plus : Sign::Minus;
}
/// (−1)^k for any integer k.
constexpr Sign minus_one_pow(long long k) {
  return (k % 2 == 0) ? Sign::Plus : Sign::Minus;
}

constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Kleene three-valued truth value.
enum class Tribool : std::uint8_t { False, True, Unknown };

constexpr Tribool tri_and(Tribool a, Tribool b) {
  if (a == Tribool::False || b == Tribool::False) return Tribool::False;
  if (a == Tribool::Unknown || b == Tribool::Unknown) return Tribool::Unknown;
  return Tribool::True;
}
constexpr Tribool to_tribool(bool b) { return b ? Tribool::True : Tribool::False; }

constexpr std::string_view to_string(Tribool t) {
  switch (t) {
    case Tribool::False: return "false";
    case Tribool::True: return "true";
    case Tribool::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace arthur
