#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace arthur {

/// An element of ½ℤ, stored as twice its value.
///
/// Every exponent, segment endpoint and quadruple coordinate in the
/// calculator lives here; arithmetic is exact and never touches floating
/// point.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_doubled(std::int64_t doubled) {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }
  static constexpr HalfInt from_int(std::int64_t value) {
    return from_doubled(2 * value);
  }
  /// Parses "3", "-1/2", "5/2". Throws arthur::Error otherwise.
  static HalfInt parse(const std::string& text);

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integral() const { return doubled_ % 2 == 0; }
  constexpr bool same_class(HalfInt other) const {
    return ((doubled_ - other.doubled_) % 2) == 0;
  }
  /// Integer value; only meaningful when is_integral().
  constexpr std::int64_t as_int() const { return doubled_ / 2; }

  constexpr HalfInt abs() const {
    return from_doubled(doubled_ < 0 ? -doubled_ : doubled_);
  }

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    doubled_ += o.doubled_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    doubled_ -= o.doubled_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator+(HalfInt a, std::int64_t k) {
    return a += from_int(k);
  }
  friend constexpr HalfInt operator-(HalfInt a, std::int64_t k) {
    return a -= from_int(k);
  }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string to_string() const;

 private:
  std::int64_t doubled_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

inline constexpr HalfInt kHalf = HalfInt::from_doubled(1);

/// True iff x is one of lo, lo±1, ..., hi (walking toward hi). Points of a
/// different integrality class are never members.
constexpr bool halfint_in_segment(HalfInt x, HalfInt lo, HalfInt hi) {
  if (!x.same_class(lo) || !lo.same_class(hi)) return false;
  return lo <= hi ? (lo <= x && x <= hi) : (hi <= x && x <= lo);
}

}  // namespace arthur

template <>
struct std::hash<arthur::HalfInt> {
  std::size_t operator()(arthur::HalfInt h) const noexcept {
    return std::hash<std::int64_t>{}(h.doubled());
  }
};
