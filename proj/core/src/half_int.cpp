#include "arthur/half_int.hpp"

#include <charconv>
#include <ostream>

#include "arthur/error.hpp"
#include "arthur/rational.hpp"

namespace arthur {

namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw Error("malformed number: '" + whole + "'");
  }
  return value;
}

}  // namespace

HalfInt HalfInt::parse(const std::string& text) {
  Rational q = parse_rational(text);
  if (!is_half_integer(q)) throw Error("not a half-integer: '" + text + "'");
  return to_half_int(q);
}

std::string HalfInt::to_string() const {
  if (is_integral()) return std::to_string(as_int());
  return std::to_string(doubled_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

HalfInt to_half_int(const Rational& q) {
  if (!is_half_integer(q)) throw Error("not a half-integer: " + to_string(q));
  return HalfInt::from_doubled(q.denominator() == 1 ? 2 * q.numerator() : q.numerator());
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  std::string_view view(text);
  auto slash = view.find('/');
  std::int64_t num = parse_int(view.substr(0, slash), text);
  std::int64_t den = 1;
  if (slash != std::string_view::npos) {
    std::string_view rest = view.substr(slash + 1);
    if (!rest.empty() && (rest[0] == '-' || rest[0] == '+')) {
      throw Error("malformed number: '" + text + "'");
    }
    den = parse_int(rest, text);
  }
  if (den == 0) throw Error("zero denominator: '" + text + "'");
  return Rational(num, den);
}

}  // namespace arthur
