#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "arthur/half_int.hpp"

namespace arthur {

using Rational = boost::rational<std::int64_t>;

inline Rational to_rational(HalfInt h) { return Rational(h.doubled(), 2); }

/// True iff q ∈ ½ℤ.
inline bool is_half_integer(const Rational& q) {
  return q.denominator() == 1 || q.denominator() == 2;
}

/// Requires is_half_integer(q).
HalfInt to_half_int(const Rational& q);

/// "p/q" or "p" when integral.
std::string to_string(const Rational& q);

/// Parses "p", "-p/q". Throws arthur::Error on malformed text or q = 0.
Rational parse_rational(const std::string& text);

}  // namespace arthur
