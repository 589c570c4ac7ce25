#include "arthur/packets.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "arthur/error.hpp"
#include "arthur/lfactors.hpp"

namespace arthur {

bool constraint1_holds(int a, int b, int t, Sign eta) {
  const int m = std::min(a, b);
  if (t < 0 || t > m / 2) return false;
  return 2 * t != m || eta == Sign::Plus;
}

std::vector<std::pair<int, Sign>> local_params(int a, int b) {
  std::vector<std::pair<int, Sign>> out;
  const int m = std::min(a, b);
  for (int t = 0; t <= m / 2; ++t) {
    out.emplace_back(t, Sign::Plus);
    if (2 * t != m) out.emplace_back(t, Sign::Minus);
  }
  return out;
}

namespace {

Sign raw_block_sign(int a, int b, int t, Sign eta) {
  const int m = std::min(a, b);
  return pow(eta, m) * minus_one_pow(m / 2 + t);
}

}  // namespace

Sign block_sign(int a, int b, int t, Sign eta) {
  if (!constraint1_holds(a, b, t, eta)) {
    throw Error("(t, eta) = (" + std::to_string(t) + ", " + to_char(eta) +
                ") violates constraint (1) for (a, b) = (" + std::to_string(a) + ", " +
                std::to_string(b) + ")");
  }
  return raw_block_sign(a, b, t, eta);
}

std::string_view to_string(ParamViolationKind k) {
  switch (k) {
    case ParamViolationKind::SizeMismatch: return "SizeMismatch";
    case ParamViolationKind::Constraint1: return "Constraint1";
    case ParamViolationKind::Constraint2: return "Constraint2";
  }
  return "SizeMismatch";
}

std::vector<ParamViolation> validate_params(const OrderedJord& psi, const PacketParams& params,
                                            Sign epsilon) {
  const std::size_t n = psi.size();
  if (params.t.size() != n || params.eta.size() != n) {
    return {{ParamViolationKind::SizeMismatch, std::nullopt,
             "params cover " + std::to_string(params.t.size()) + "/" +
                 std::to_string(params.eta.size()) + " positions, Jord has " +
                 std::to_string(n)}};
  }
  std::vector<ParamViolation> out;
  Sign product = Sign::Plus;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = psi.blocks[i];
    if (!constraint1_holds(b.a, b.b, params.t[i], params.eta[i])) {
      out.push_back({ParamViolationKind::Constraint1, i,
                     "t = " + std::to_string(params.t[i]) + ", eta = " + to_char(params.eta[i]) +
                         " outside the range allowed by min(a, b) = " +
                         std::to_string(std::min(b.a, b.b))});
      continue;
    }
    product = product * raw_block_sign(b.a, b.b, params.t[i], params.eta[i]);
  }
  // The global product is only meaningful once every factor is well defined.
  if (out.empty() && product != epsilon) {
    out.push_back({ParamViolationKind::Constraint2, std::nullopt,
                   std::string("product of block signs is ") + to_char(product) +
                       ", epsilon_G is " + to_char(epsilon)});
  }
  return out;
}

std::vector<PacketParams> enumerate_params(const OrderedJord& psi, Sign epsilon) {
  const std::size_t n = psi.size();
  std::vector<std::vector<std::pair<int, Sign>>> choices;
  choices.reserve(n);
  for (const auto& b : psi.blocks) choices.push_back(local_params(b.a, b.b));

  std::vector<PacketParams> out;
  PacketParams cur{std::vector<int>(n), std::vector<Sign>(n, Sign::Plus)};
  auto rec = [&](auto&& self, std::size_t i, Sign product) -> void {
    if (i == n) {
      if (product == epsilon) out.push_back(cur);
      return;
    }
    const auto& b = psi.blocks[i];
    for (const auto& [t, eta] : choices[i]) {
      cur.t[i] = t;
      cur.eta[i] = eta;
      self(self, i + 1, product * raw_block_sign(b.a, b.b, t, eta));
    }
  };
  rec(rec, 0, Sign::Plus);
  return out;
}

std::uint64_t count_params(std::span<const JordanBlock> jord, Sign epsilon) {
  // ways[0]: product +, ways[1]: product −.
  std::array<std::uint64_t, 2> ways{1, 0};
  for (const auto& b : jord) {
    std::array<std::uint64_t, 2> local{0, 0};
    for (const auto& [t, eta] : local_params(b.a, b.b)) {
      ++local[raw_block_sign(b.a, b.b, t, eta) == Sign::Plus ? 0 : 1];
    }
    ways = {ways[0] * local[0] + ways[1] * local[1], ways[0] * local[1] + ways[1] * local[0]};
  }
  return ways[epsilon == Sign::Plus ? 0 : 1];
}

std::string_view to_string(OrderViolationKind k) {
  switch (k) {
    case OrderViolationKind::P: return "P";
    case OrderViolationKind::Pp1: return "Pp1";
    case OrderViolationKind::Pp2: return "Pp2";
    case OrderViolationKind::ExceptionalMinimality: return "ExceptionalMinimality";
    case OrderViolationKind::Condition0: return "Condition0";
    case OrderViolationKind::Condition1: return "Condition1";
    case OrderViolationKind::Condition2: return "Condition2";
    case OrderViolationKind::Condition3: return "Condition3";
    case OrderViolationKind::Condition4: return "Condition4";
  }
  return "P";
}

namespace {

std::string describe(const Quadruple& q) {
  return "(" + q.A.to_string() + "," + q.B.to_string() + "," + to_char(q.zeta) + ")";
}

void check_p(std::span<const JordanBlock> blocks, std::span<const Quadruple> quads,
             std::vector<OrderViolation>& out) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks[i].rho != blocks[j].rho || quads[i].zeta != quads[j].zeta) continue;
      if (quads[i].A > quads[j].A && quads[i].B > quads[j].B) {
        out.push_back({OrderViolationKind::P,
                       {i, j},
                       describe(quads[i]) + " dominates " + describe(quads[j]) +
                           " but sits below it"});
      }
    }
  }
}

bool is_copy(const JordanBlock& b, const JordanBlock& ref) { return b == ref; }

}  // namespace

std::vector<OrderViolation> check_property_p(std::span<const JordanBlock> blocks) {
  std::vector<Quadruple> quads;
  quads.reserve(blocks.size());
  for (const auto& b : blocks) quads.push_back(b.quadruple());
  std::vector<OrderViolation> out;
  check_p(blocks, quads, out);
  return out;
}

std::vector<Quadruple> order_quadruples(const OrderedJord& psi, const TargetTriple& target,
                                        OrderRole /*role*/,
                                        std::optional<std::size_t> /*distinguished*/) {
  // Every copy of (ρ, a₀, b₀−2) reads in the primed coordinates, so equal
  // blocks stay interchangeable whichever copy is distinguished.
  const auto prime = target.prime_quad();
  const JordanBlock prime_block = target.prime_block();
  std::vector<Quadruple> out;
  out.reserve(psi.size());
  for (const auto& b : psi.blocks) {
    out.push_back(prime && is_copy(b, prime_block) ? *prime : b.quadruple());
  }
  return out;
}

std::optional<std::size_t> distinguished_position(const OrderedJord& psi,
                                                  const TargetTriple& target, OrderRole role) {
  if (role == OrderRole::Base) {
    if (!target.has_prime()) return std::nullopt;
    const JordanBlock ref = target.prime_block();
    // The exceptional case wants the copy at the bottom, the others the one
    // sitting above every block with A <= A'0.
    if (target.is_exceptional()) {
      for (std::size_t i = 0; i < psi.size(); ++i) {
        if (is_copy(psi.blocks[i], ref)) return i;
      }
    } else {
      for (std::size_t i = psi.size(); i-- > 0;) {
        if (is_copy(psi.blocks[i], ref)) return i;
      }
    }
    throw Error("Jord lacks the block (" + ref.rho + "," + std::to_string(ref.a) + "," +
                std::to_string(ref.b) + ") required by the target");
  }
  const JordanBlock ref = target.plus_block();
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (is_copy(psi.blocks[i], ref)) return i;
  }
  throw Error("Jord lacks the block (" + ref.rho + "," + std::to_string(ref.a) + "," +
              std::to_string(ref.b) + ") of the target");
}

std::vector<OrderViolation> validate_order(const OrderedJord& psi, const TargetTriple& target,
                                           OrderRole role,
                                           std::optional<std::size_t> distinguished) {
  std::optional<std::size_t> d = distinguished_position(psi, target, role);
  if (distinguished) {
    const JordanBlock ref = role == OrderRole::Base ? target.prime_block() : target.plus_block();
    if (!d || *distinguished >= psi.size() || !is_copy(psi.blocks[*distinguished], ref)) {
      throw Error("position " + std::to_string(*distinguished) +
                  " does not hold the distinguished block");
    }
    d = distinguished;
  }

  const auto quads = order_quadruples(psi, target, role, d);
  const Quadruple q0 = target.quad();
  const auto prime = target.prime_quad();
  const std::size_t n = psi.size();
  const auto& blocks = psi.blocks;
  auto is_rho = [&](std::size_t i) { return blocks[i].rho == target.rho && blocks[i].is_unitary(); };

  std::vector<OrderViolation> out;
  check_p(blocks, quads, out);

  std::vector<std::size_t> contributors;
  for (std::size_t i : pole_contributors(blocks, target.rho, target.a0, target.b0)) {
    if (i != d) contributors.push_back(i);
  }

  if (d) {
    for (std::size_t c : contributors) {
      if (c < *d) {
        out.push_back({OrderViolationKind::Pp1,
                       {c, *d},
                       "pole-contributing block " + describe(quads[c]) +
                           " sits below the distinguished block"});
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (!is_rho(x) || x == d || quads[x].A >= q0.A) continue;
    for (std::size_t c : contributors) {
      if (x > c) {
        out.push_back({OrderViolationKind::Pp2,
                       {x, c},
                       describe(quads[x]) + " has A < A0 but sits above the pole-contributing " +
                           describe(quads[c])});
      }
    }
  }

  if (!d) return out;

  const bool exceptional =
      target.is_exceptional() || (role == OrderRole::Plus && target.a0 == 1 && target.b0 == 2);
  if (exceptional && *d != 0) {
    out.push_back({OrderViolationKind::ExceptionalMinimality,
                   {*d},
                   "the distinguished block must be the smallest element"});
  }

  if (q0.zeta == Sign::Plus) {
    for (std::size_t x = *d + 1; x < n; ++x) {
      if (!is_rho(x)) continue;
      const Quadruple& q = quads[x];
      if (q.zeta == Sign::Plus && q.A < q0.A && q.B <= q0.B + 1) {
        out.push_back({OrderViolationKind::Condition0,
                       {x, *d},
                       describe(q) + " sits above the distinguished block with B <= B0 + 1"});
      }
    }
  }

  if (!prime || target.is_exceptional()) return out;

  const Quadruple& qp = *prime;
  for (std::size_t x = 0; x < n; ++x) {
    if (x == *d || !is_rho(x)) continue;
    const Quadruple& q = quads[x];
    if (q.zeta != q0.zeta) continue;
    const bool above = x > *d;
    auto flag = [&](OrderViolationKind kind, bool want_above) {
      if (above != want_above) {
        out.push_back({kind,
                       {x, *d},
                       describe(q) + " must sit " + (want_above ? "above" : "below") +
                           " the distinguished block"});
      }
    };
    if (q.A == q0.A && q.B > qp.B) flag(OrderViolationKind::Condition1, true);
    if (q.A == qp.A && q.B < q0.B) flag(OrderViolationKind::Condition2, false);
    if (q.B == q0.B) {
      if (q0.zeta == Sign::Plus && q.A < qp.A) flag(OrderViolationKind::Condition3, false);
      if (q0.zeta == Sign::Minus && q.A >= q0.A) flag(OrderViolationKind::Condition3, true);
    }
    if (q.B == qp.B) {
      if (q0.zeta == Sign::Plus && q.A > q0.A) flag(OrderViolationKind::Condition4, true);
      if (q0.zeta == Sign::Minus && q.A < q0.A) flag(OrderViolationKind::Condition4, false);
    }
  }
  return out;
}

bool canonical_less(const JordanBlock& x, const JordanBlock& y) {
  const Quadruple qx = x.quadruple();
  const Quadruple qy = y.quadruple();
  return std::tuple(qx.A, qx.B, to_int(qx.zeta), std::string_view(x.rho), x.twist) <
         std::tuple(qy.A, qy.B, to_int(qy.zeta), std::string_view(y.rho), y.twist);
}

OrderedJord canonical_order(std::span<const JordanBlock> jord, const TargetTriple& target) {
  std::vector<JordanBlock> rest(jord.begin(), jord.end());
  std::optional<JordanBlock> prime;
  if (target.has_prime()) {
    const JordanBlock ref = target.prime_block();
    auto it = std::find(rest.begin(), rest.end(), ref);
    if (it == rest.end()) {
      throw Error("Jord lacks the block (" + ref.rho + "," + std::to_string(ref.a) + "," +
                  std::to_string(ref.b) + ") required by the target");
    }
    prime = *it;
    rest.erase(it);
  }
  std::stable_sort(rest.begin(), rest.end(), canonical_less);
  if (prime) {
    std::size_t at = 0;
    if (!target.is_exceptional()) {
      const HalfInt a_prime = target.prime_quad()->A;
      while (at < rest.size() && rest[at].quadruple().A <= a_prime) ++at;
    }
    rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(at), *prime);
  }
  return OrderedJord{std::move(rest), target};
}

}  // namespace arthur
