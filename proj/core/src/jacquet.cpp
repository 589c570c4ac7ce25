#include "arthur/jacquet.hpp"

#include <algorithm>
#include <deque>

#include "arthur/error.hpp"

namespace arthur {

std::vector<HalfInt> jac_normal_form(const std::vector<HalfInt>& word) {
  // Greedy lex-min for a trace monoid: repeatedly emit the least letter that
  // commutes with everything before it.
  std::vector<HalfInt> rest = word;
  std::vector<HalfInt> out;
  out.reserve(word.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (rest[i] >= rest[best]) continue;
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j) movable = jac_commute(rest[i], rest[j]);
      if (movable) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

JacSequence jac_normal_form(const JacSequence& seq) {
  return JacSequence{seq.rho, jac_normal_form(seq.exponents)};
}

Segment::Segment(HalfInt from, HalfInt to) : from_(from), to_(to) {
  if (!from.same_class(to)) {
    throw Error("segment [" + from.to_string() + ", " + to.to_string() +
                "] has non-integral length");
  }
}

std::size_t Segment::length() const {
  return static_cast<std::size_t>((hi() - lo()).as_int()) + 1;
}

std::vector<HalfInt> Segment::entries() const {
  std::vector<HalfInt> out;
  out.reserve(length());
  const std::int64_t step = from_ <= to_ ? 1 : -1;
  for (HalfInt x = from_;; x = x + step) {
    out.push_back(x);
    if (x == to_) break;
  }
  return out;
}

std::string to_string(const Segment& s) {
  return "[" + s.from().to_string() + ", " + s.to().to_string() + "]";
}

bool jac_nonvanishing_necessary(const ArthurParameter& psi, std::string_view rho,
                                const Segment& seg) {
  std::vector<Quadruple> nodes;
  for (const auto& b : psi.blocks) {
    if (b.rho == rho && b.is_unitary()) nodes.push_back(b.quadruple());
  }
  const HalfInt reach = seg.to().abs();
  std::vector<bool> seen(nodes.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].signed_b() == seg.from()) {
      seen[i] = true;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    if (nodes[i].A >= reach) return true;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (!seen[j] && nodes[j].B <= nodes[i].A + 1) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  return false;
}

std::string_view to_string(Irreducibility v) {
  return v == Irreducibility::Irreducible ? "Irreducible" : "Unknown";
}

Irreducibility irreducible_cuspidal_twist(const ArthurParameter& psi, std::string_view rho,
                                          HalfInt x) {
  if (x == HalfInt{}) throw Error("irreducibility criterion needs x != 0");
  const HalfInt ax = x.abs();
  for (const auto& b : psi.blocks) {
    if (b.rho != rho) continue;
    const Quadruple q = b.quadruple();
    if (!(q.A < ax - 1 || q.B > ax)) return Irreducibility::Unknown;
  }
  return Irreducibility::Irreducible;
}

bool segments_linked(const Segment& d1, const Segment& d2) {
  if (!d1.from().same_class(d2.from())) return false;
  const HalfInt lo = std::max(d1.lo(), d2.lo());
  const HalfInt hi = std::min(d1.hi(), d2.hi());
  if (lo > hi + 1) return false;
  const bool first_holds_second = d1.lo() <= d2.lo() && d2.hi() <= d1.hi();
  const bool second_holds_first = d2.lo() <= d1.lo() && d1.hi() <= d2.hi();
  return !first_holds_second && !second_holds_first;
}

SegmentSplit split_segment(int b) {
  if (b < 2) throw Error("split_segment needs b >= 2");
  const HalfInt top = HalfInt::from_doubled(b - 1);
  const bool odd = b % 2 == 1;
  const HalfInt delta = odd ? HalfInt{} : kHalf;
  const HalfInt delta_prime = odd ? HalfInt::from_int(1) : kHalf;
  return SegmentSplit{delta, delta_prime, Segment(-top, -delta), Segment(delta_prime, top)};
}

Irreducibility speh_pair_irreducible(bool rho_eq, bool half_sum_diff_integral,
                                     const Rational& y_plus_z, const Rational& y_plus_z_prime) {
  if (!rho_eq || !half_sum_diff_integral) return Irreducibility::Irreducible;
  if (boost::abs(y_plus_z - y_plus_z_prime) < Rational(1)) return Irreducibility::Irreducible;
  return Irreducibility::Unknown;
}

}  // namespace arthur
