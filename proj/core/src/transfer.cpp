#include "arthur/transfer.hpp"

#include <algorithm>
#include <set>

#include "arthur/error.hpp"

namespace arthur {

namespace {

std::string block_text(const JordanBlock& b) {
  return "(" + b.rho + "," + std::to_string(b.a) + "," + std::to_string(b.b) + ")";
}

}  // namespace

ArthurParameter build_psi_plus(const ArthurParameter& psi, const TargetTriple& target,
                               const LabelUniverse& labels) {
  const JordanBlock plus = target.plus_block();
  if (!good_parity(plus, psi.group, labels)) {
    throw Error("target " + block_text(plus) + " is not of good parity for " +
                std::string(to_string(psi.group.kind)));
  }
  ArthurParameter out = psi;
  if (target.has_prime()) {
    const JordanBlock ref = target.prime_block();
    auto it = std::find(out.blocks.begin(), out.blocks.end(), ref);
    if (it == out.blocks.end()) {
      throw Error("Jord lacks the block " + block_text(ref) + " required by the target");
    }
    *it = plus;
  } else {
    out.blocks.push_back(plus);
  }
  out.group.m_star += 2 * target.a0 * labels.at(target.rho).dim;
  for (const auto& v : validate_parameter(out, labels, TwistPolicy::Allow)) {
    if (v.kind == ViolationKind::DimensionMismatch) throw Error("psi+ fails: " + v.detail);
  }
  return out;
}

TransferredParams transfer_params(int t0, Sign eta0, int a0, int b0) {
  const TargetTriple target = TargetTriple::make("", a0, b0);
  if (!target.has_prime()) {
    t0 = 0;
    eta0 = Sign::Plus;
  } else if (!constraint1_holds(a0, b0 - 2, t0, eta0)) {
    throw Error("(t0, eta0) = (" + std::to_string(t0) + ", " + to_char(eta0) +
                ") violates constraint (1) for (" + std::to_string(a0) + ", " +
                std::to_string(b0 - 2) + ")");
  }
  if (target.is_exceptional()) {
    return {eta0 == Sign::Plus ? t0 + 1 : t0, -eta0};
  }
  return {target.quad().zeta == Sign::Plus ? t0 + 1 : t0, eta0};
}

bool check_sign_identity(int a0, int b0, int t0, Sign eta0) {
  const TransferredParams plus = transfer_params(t0, eta0, a0, b0);
  const Sign lhs = b0 == 2 ? Sign::Plus : block_sign(a0, b0 - 2, t0, eta0);
  const int m = std::min(a0, b0);
  const Sign rhs = pow(plus.eta, m) * minus_one_pow(m / 2 + plus.t);
  return lhs == rhs;
}

std::size_t induced_position(const OrderedJord& psi, const TargetTriple& target,
                             std::optional<std::size_t> insert_at) {
  if (target.has_prime()) {
    if (insert_at) throw Error("an insertion position only applies when b0 = 2");
    return *distinguished_position(psi, target, OrderRole::Base);
  }
  if (!insert_at) {
    throw Error("b0 = 2: the order on Jord(psi+) is not determined; supply a position");
  }
  if (*insert_at > psi.size()) throw Error("insertion position out of range");
  return *insert_at;
}

OrderedJord induced_order(const OrderedJord& psi, const TargetTriple& target,
                          std::optional<std::size_t> insert_at) {
  const std::size_t pos = induced_position(psi, target, insert_at);
  OrderedJord out{psi.blocks, target};
  if (target.has_prime()) {
    out.blocks[pos] = target.plus_block();
  } else {
    out.blocks.insert(out.blocks.begin() + static_cast<std::ptrdiff_t>(pos), target.plus_block());
  }
  return out;
}

std::size_t canonical_insertion(const OrderedJord& psi, const TargetTriple& target) {
  if (target.has_prime()) throw Error("canonical_insertion only applies when b0 = 2");
  for (std::size_t pos = 0; pos <= psi.size(); ++pos) {
    if (validate_order(induced_order(psi, target, pos), target, OrderRole::Plus).empty()) {
      return pos;
    }
  }
  // No admissible slot; fall back to just above the ρ-blocks with A < A₀.
  const HalfInt a0 = target.quad().A;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const auto& b = psi.blocks[i];
    if (b.rho == target.rho && b.quadruple().A < a0) pos = i + 1;
  }
  return pos;
}

OrderedJord restrict_order(const OrderedJord& psi_plus, const TargetTriple& target,
                           std::size_t position) {
  if (position >= psi_plus.size() || psi_plus.blocks[position] != target.plus_block()) {
    throw Error("position " + std::to_string(position) + " does not hold " +
                block_text(target.plus_block()));
  }
  OrderedJord out{psi_plus.blocks, target};
  if (target.has_prime()) {
    out.blocks[position] = target.prime_block();
  } else {
    out.blocks.erase(out.blocks.begin() + static_cast<std::ptrdiff_t>(position));
  }
  return out;
}

TransferRecord transfer(const ArthurParameter& psi, const OrderedJord& order,
                        const PacketParams& params, const TargetTriple& target,
                        const LabelUniverse& labels, std::optional<std::size_t> insert_at) {
  if (!same_multiset(order.blocks, psi.blocks)) {
    throw Error("the order does not list Jord(psi)");
  }
  if (params.t.size() != order.size() || params.eta.size() != order.size()) {
    throw Error("packet parameters do not cover every position");
  }
  TransferRecord rec;
  rec.psi_plus = build_psi_plus(psi, target, labels);
  if (!target.has_prime() && !insert_at) insert_at = canonical_insertion(order, target);
  rec.position = induced_position(order, target, insert_at);
  rec.order = induced_order(order, target, insert_at);
  rec.params = params;

  int t0 = 0;
  Sign eta0 = Sign::Plus;
  if (target.has_prime()) {
    t0 = params.t[rec.position];
    eta0 = params.eta[rec.position];
  }
  const TransferredParams plus = transfer_params(t0, eta0, target.a0, target.b0);
  const auto at = static_cast<std::ptrdiff_t>(rec.position);
  if (target.has_prime()) {
    rec.params.t[rec.position] = plus.t;
    rec.params.eta[rec.position] = plus.eta;
  } else {
    rec.params.t.insert(rec.params.t.begin() + at, plus.t);
    rec.params.eta.insert(rec.params.eta.begin() + at, plus.eta);
  }
  return rec;
}

std::vector<OrderedJord> admissible_orders(std::span<const JordanBlock> jord,
                                           const TargetTriple& target) {
  if (jord.size() > 8) throw Error("admissible_orders is limited to 8 blocks");
  std::vector<JordanBlock> perm(jord.begin(), jord.end());
  std::sort(perm.begin(), perm.end(), block_less);
  std::vector<OrderedJord> out;
  do {
    OrderedJord candidate{perm, target};
    if (validate_order(candidate, target).empty()) out.push_back(std::move(candidate));
  } while (std::next_permutation(perm.begin(), perm.end(), block_less));
  return out;
}

namespace {

std::string labelled_key(const TransferRecord& rec) {
  std::vector<std::string> items;
  for (std::size_t i = 0; i < rec.order.size(); ++i) {
    const auto& b = rec.order.blocks[i];
    items.push_back(block_text(b) + "x" + to_string(b.twist) + ":" +
                    std::to_string(rec.params.t[i]) + to_char(rec.params.eta[i]));
  }
  std::sort(items.begin(), items.end());
  std::string key;
  for (const auto& s : items) key += s + ";";
  return key;
}

std::set<std::string> transferred_set(const ArthurParameter& psi, const OrderedJord& order,
                                      const TargetTriple& target, const LabelUniverse& labels,
                                      std::size_t& count) {
  std::set<std::string> out;
  for (const auto& p : enumerate_params(order, psi.group.epsilon)) {
    out.insert(labelled_key(transfer(psi, order, p, target, labels)));
    ++count;
  }
  return out;
}

}  // namespace

OrderIndependenceReport order_independence(const ArthurParameter& psi, const TargetTriple& target,
                                           const LabelUniverse& labels) {
  OrderIndependenceReport report;
  const OrderedJord reference_order = canonical_order(psi.blocks, target);
  const auto reference =
      transferred_set(psi, reference_order, target, labels, report.params_checked);
  for (const auto& order : admissible_orders(psi.blocks, target)) {
    ++report.orders_checked;
    const auto got = transferred_set(psi, order, target, labels, report.params_checked);
    if (got != reference) {
      std::string text = "order [";
      for (std::size_t i = 0; i < order.size(); ++i) {
        text += (i ? " " : "") + block_text(order.blocks[i]);
      }
      text += "] transfers to " + std::to_string(got.size()) + " parameters, canonical gives " +
              std::to_string(reference.size());
      report.discrepancies.push_back(std::move(text));
    }
  }
  return report;
}

}  // namespace arthur
