#include "arthur/jordan.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>

#include "arthur/error.hpp"

namespace arthur {

Quadruple to_quadruple(int a, int b) {
  return Quadruple{
      HalfInt::from_doubled(a + b - 2),
      HalfInt::from_doubled(a > b ? a - b : b - a),
      a >= b ? Sign::Plus : Sign::Minus,
  };
}

BlockDims from_quadruple(HalfInt A, HalfInt B, Sign zeta) {
  if (B < HalfInt{} || A < B) throw Error("quadruple needs A >= B >= 0");
  if (!A.same_class(B)) throw Error("quadruple needs A - B integral");
  if (B == HalfInt{} && zeta == Sign::Minus) throw Error("quadruple with B = 0 must have zeta = +");
  const int hi = static_cast<int>((A + B).as_int()) + 1;
  const int lo = static_cast<int>((A - B).as_int()) + 1;
  return zeta == Sign::Plus ? BlockDims{hi, lo} : BlockDims{lo, hi};
}

bool block_less(const JordanBlock& x, const JordanBlock& y) {
  return std::tie(x.rho, x.a, x.b, x.twist) < std::tie(y.rho, y.a, y.b, y.twist);
}

bool same_multiset(std::span<const JordanBlock> x, std::span<const JordanBlock> y) {
  if (x.size() != y.size()) return false;
  std::vector<JordanBlock> xs(x.begin(), x.end());
  std::vector<JordanBlock> ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end(), block_less);
  std::sort(ys.begin(), ys.end(), block_less);
  return xs == ys;
}

Parity block_parity(const JordanBlock& block, const LabelUniverse& labels) {
  const auto& label = labels.at(block.rho);
  if (!label.self_dual) throw Error("label '" + label.id + "' is not self-dual");
  if (label.parity == Parity::None) {
    throw Error("self-dual label '" + label.id + "' has no declared parity");
  }
  Sign s = parity_sign(label.parity);
  if (block.a % 2 == 0) s = -s;
  if (block.b % 2 == 0) s = -s;
  return parity_from_sign(s);
}

bool good_parity(const JordanBlock& block, const GroupType& group, const LabelUniverse& labels) {
  if (!block.is_unitary()) return false;
  if (!labels.at(block.rho).self_dual) return false;
  return block_parity(block, labels) == group.dual_parity();
}

namespace {

using Key = std::tuple<std::string, int, int, Rational>;

Key key_of(const JordanBlock& b) { return {b.rho, b.a, b.b, b.twist}; }

// The block ψ must also contain for ψ to be self-dual. A non-self-dual
// label with no declared dual has no twin at all.
std::optional<Key> twin_key(const JordanBlock& b, const LabelUniverse& labels) {
  const auto& label = labels.at(b.rho);
  if (!label.self_dual && label.dual.empty()) return std::nullopt;
  return Key{labels.dual_of(b.rho), b.a, b.b, -b.twist};
}

std::size_t count_of(const std::map<Key, int>& m, const std::optional<Key>& k) {
  if (!k) return 0;
  auto it = m.find(*k);
  return it == m.end() ? 0 : static_cast<std::size_t>(it->second);
}

}  // namespace

Decomposition decompose(const ArthurParameter& psi, const LabelUniverse& labels) {
  Decomposition out;
  std::map<Key, int> rest;
  for (const auto& b : psi.blocks) {
    if (good_parity(b, psi.group, labels)) {
      out.bp.push_back(b);
    } else {
      ++rest[key_of(b)];
    }
  }
  for (const auto& [key, count] : rest) {
    JordanBlock b{std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key)};
    const auto twin = twin_key(b, labels);
    const bool self_twin = twin == key;
    const std::size_t twin_count = count_of(rest, twin);
    if (!twin || (self_twin ? count % 2 != 0 : twin_count != static_cast<std::size_t>(count))) {
      throw Error("block (" + b.rho + "," + std::to_string(b.a) + "," + std::to_string(b.b) +
                  ") has no dual twin; the parameter does not factor through the dual group");
    }
    if (b.is_unitary()) {
      if (self_twin) {
        out.mp_half.insert(out.mp_half.end(), count / 2, b);
      } else if (key < *twin) {
        out.mp_half.insert(out.mp_half.end(), count, b);
      }
    } else if (b.twist.numerator() > 0) {
      out.nu_pos.insert(out.nu_pos.end(), count, b);
    }
  }
  return out;
}

std::optional<std::vector<std::int64_t>> dominates(std::span<const JordanBlock> gt,
                                                   std::span<const JordanBlock> base) {
  if (gt.size() != base.size()) throw Error("dominates: Jord sizes differ");
  std::vector<std::int64_t> shifts;
  shifts.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (gt[i].rho != base[i].rho) return std::nullopt;
    const Quadruple q = base[i].quadruple();
    const Quadruple g = gt[i].quadruple();
    if (q.zeta != g.zeta) return std::nullopt;
    const HalfInt dA = g.A - q.A;
    const HalfInt dB = g.B - q.B;
    if (dA != dB || dA < HalfInt{} || !dA.is_integral()) return std::nullopt;
    shifts.push_back(dA.as_int());
  }
  return shifts;
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::DimensionMismatch: return "DimensionMismatch";
    case ViolationKind::UnpairedBlock: return "UnpairedBlock";
    case ViolationKind::TwistOutOfRange: return "TwistOutOfRange";
    case ViolationKind::UnknownLabel: return "UnknownLabel";
    case ViolationKind::InvalidBlock: return "InvalidBlock";
    case ViolationKind::UndeclaredParity: return "UndeclaredParity";
  }
  return "InvalidBlock";
}

std::vector<ParameterViolation> validate_parameter(const ArthurParameter& psi,
                                                   const LabelUniverse& labels,
                                                   TwistPolicy policy) {
  std::vector<ParameterViolation> out;
  long long dim = 0;
  std::map<Key, std::vector<std::size_t>> rest;
  std::map<Key, int> counts;
  const Rational half(1, 2);

  for (std::size_t i = 0; i < psi.blocks.size(); ++i) {
    const auto& b = psi.blocks[i];
    if (!labels.contains(b.rho)) {
      out.push_back({ViolationKind::UnknownLabel, i, "unknown label '" + b.rho + "'"});
      continue;
    }
    if (b.a < 1 || b.b < 1) {
      out.push_back({ViolationKind::InvalidBlock, i, "a and b must be positive"});
      continue;
    }
    const auto& label = labels.at(b.rho);
    dim += static_cast<long long>(b.a) * b.b * label.dim;
    if (!b.is_unitary() && policy == TwistPolicy::Reject && boost::abs(b.twist) >= half) {
      out.push_back({ViolationKind::TwistOutOfRange, i,
                     "|x| = " + to_string(boost::abs(b.twist)) + " is not below 1/2"});
    }
    if (b.is_unitary() && label.self_dual && label.parity == Parity::None) {
      out.push_back({ViolationKind::UndeclaredParity, i,
                     "self-dual label '" + b.rho + "' has no declared parity"});
      continue;
    }
    if (!good_parity(b, psi.group, labels)) {
      rest[key_of(b)].push_back(i);
      ++counts[key_of(b)];
    }
  }

  for (const auto& [key, where] : rest) {
    const auto& [rho, a, bb, x] = key;
    JordanBlock b{rho, a, bb, x};
    const auto twin = twin_key(b, labels);
    const bool self_twin = twin == key;
    const std::size_t twin_count = count_of(counts, twin);
    const std::size_t unmatched = !twin      ? where.size()
                                  : self_twin ? where.size() % 2
                                  : where.size() > twin_count ? where.size() - twin_count
                                                              : 0;
    for (std::size_t k = where.size() - unmatched; k < where.size(); ++k) {
      out.push_back({ViolationKind::UnpairedBlock, where[k],
                     "block (" + rho + "," + std::to_string(a) + "," + std::to_string(bb) +
                         ") is not good parity and lacks its dual twin"});
    }
  }

  if (dim != psi.group.m_star) {
    out.push_back({ViolationKind::DimensionMismatch, std::nullopt,
                   "sum of a*b*dim is " + std::to_string(dim) + ", m* is " +
                       std::to_string(psi.group.m_star)});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const std::size_t bx = x.block.value_or(SIZE_MAX);
    const std::size_t by = y.block.value_or(SIZE_MAX);
    return bx < by;
  });
  return out;
}

}  // namespace arthur
