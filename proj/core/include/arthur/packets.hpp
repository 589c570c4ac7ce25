#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arthur/jordan.hpp"
#include "arthur/sign.hpp"
#include "arthur/target.hpp"

namespace arthur {

/// Jord(ψ) together with a total order: the list order is the order,
/// smallest first. Equal blocks are told apart by position.
struct OrderedJord {
  std::vector<JordanBlock> blocks;
  std::optional<TargetTriple> context;

  std::size_t size() const { return blocks.size(); }
};

/// (t, η) indexed by position in an OrderedJord.
struct PacketParams {
  std::vector<int> t;
  std::vector<Sign> eta;

  friend bool operator==(const PacketParams&, const PacketParams&) = default;
};

/// Constraint (1) for one block: 0 ≤ t ≤ ⌊min(a,b)/2⌋, and η = + when
/// 2t = min(a,b).
bool constraint1_holds(int a, int b, int t, Sign eta);

/// All (t, η) satisfying constraint (1) for (a, b), t ascending, + first.
std::vector<std::pair<int, Sign>> local_params(int a, int b);

/// η^{min(a,b)} · (−1)^{⌊min(a,b)/2⌋ + t}. Throws arthur::Error when
/// constraint (1) fails.
Sign block_sign(int a, int b, int t, Sign eta);

enum class ParamViolationKind { SizeMismatch, Constraint1, Constraint2 };
std::string_view to_string(ParamViolationKind k);

struct ParamViolation {
  ParamViolationKind kind;
  std::optional<std::size_t> position;
  std::string detail;
};

/// Empty iff every position satisfies constraint (1) and the product of
/// block signs equals ε_G (constraint (2)).
std::vector<ParamViolation> validate_params(const OrderedJord& psi, const PacketParams& params,
                                            Sign epsilon);

/// Every (t, η) on Jord satisfying (1) and (2), in lexicographic order of
/// positions (t ascending, + before −). Some of them index the zero
/// representation; nullity is not decided here.
std::vector<PacketParams> enumerate_params(const OrderedJord& psi, Sign epsilon);

/// Size of enumerate_params without materializing it.
std::uint64_t count_params(std::span<const JordanBlock> jord, Sign epsilon);

enum class OrderViolationKind {
  P,
  Pp1,
  Pp2,
  ExceptionalMinimality,
  Condition0,
  Condition1,
  Condition2,
  Condition3,
  Condition4,
};
std::string_view to_string(OrderViolationKind k);

struct OrderViolation {
  OrderViolationKind kind;
  /// Positions involved; the first is the offending block.
  std::vector<std::size_t> positions;
  std::string detail;

  friend bool operator==(const OrderViolation&, const OrderViolation&) = default;
};

/// Which side of the ψ → ψ⁺ transfer an order lives on. On Base the
/// distinguished block is (ρ, A′₀, B′₀, ζ′₀) ∈ Jord(ψ); on Plus it is
/// (ρ, A₀, B₀, ζ₀) ∈ Jord(ψ⁺).
enum class OrderRole { Base, Plus };

/// Property P alone: same ρ, same ζ, A > A′ and B > B′ force a later
/// position.
std::vector<OrderViolation> check_property_p(std::span<const JordanBlock> blocks);

/// Quadruple used by the order conditions for each position: the prime
/// block (Base) takes (A′₀, B′₀, ζ′₀), the rest use to_quadruple.
std::vector<Quadruple> order_quadruples(const OrderedJord& psi, const TargetTriple& target,
                                        OrderRole role, std::optional<std::size_t> distinguished);

/// Position of the distinguished block. Base: the last copy of
/// (ρ, a₀, b₀−2), or the first in the exceptional case a₀ = b₀ − 1; Plus:
/// the first copy of (ρ, a₀, b₀). nullopt on Base
/// when b₀ = 2. Throws arthur::Error when the block is required but absent.
std::optional<std::size_t> distinguished_position(const OrderedJord& psi,
                                                  const TargetTriple& target, OrderRole role);

/// Checks, in order, P, both halves of P_p, the minimality imposed in the
/// exceptional case a₀ = b₀ − 1 (and for a₀ = 1, b₀ = 2 on Plus), condition
/// (0) when ζ₀ = +, and the boundary conditions (1)–(4) when b₀ > 2 outside
/// the exceptional case. `distinguished` overrides the default copy.
///
/// Throws arthur::Error when the distinguished block is required but absent
/// or `distinguished` does not point at a copy of it.
std::vector<OrderViolation> validate_order(const OrderedJord& psi, const TargetTriple& target,
                                           OrderRole role = OrderRole::Base,
                                           std::optional<std::size_t> distinguished = std::nullopt);

/// Sort key of canonical_order: A, then B, then ζ (− first), then ρ id.
bool canonical_less(const JordanBlock& x, const JordanBlock& y);

/// An order on Jord(ψ) satisfying every condition of validate_order: blocks
/// sorted by canonical_less, with the prime block placed directly above all
/// blocks with A ≤ A′₀ (at the bottom in the exceptional case). Throws
/// arthur::Error when b₀ > 2 and Jord lacks (ρ, a₀, b₀−2).
OrderedJord canonical_order(std::span<const JordanBlock> jord, const TargetTriple& target);

}  // namespace arthur
