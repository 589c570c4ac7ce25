#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arthur/jordan.hpp"
#include "arthur/labels.hpp"
#include "arthur/packets.hpp"
#include "arthur/sign.hpp"
#include "arthur/target.hpp"

namespace arthur {

/// ψ⁺: the first copy of (ρ, a₀, b₀−2) in list order becomes (ρ, a₀, b₀),
/// or (ρ, a₀, 2) is appended when b₀ = 2. m*_G grows by 2·a₀·dim ρ.
///
/// Throws arthur::Error when the target is not good parity for the group,
/// the replaced block is missing, or the result fails validate_parameter.
ArthurParameter build_psi_plus(const ArthurParameter& psi, const TargetTriple& target,
                               const LabelUniverse& labels);

struct TransferredParams {
  int t;
  Sign eta;
  friend bool operator==(const TransferredParams&, const TransferredParams&) = default;
};

/// (t₀, η₀) on (ρ, a₀, b₀−2) to (t₀⁺, η₀⁺) on (ρ, a₀, b₀).
///
/// Outside the exceptional case η⁺ = η₀ and t⁺ = t₀ + 1 when ζ₀ = +, t₀
/// otherwise. In the exceptional case a₀ = b₀ − 1, η⁺ = −η₀ and t⁺ = t₀ + 1
/// when η₀ = +, t₀ otherwise. For b₀ = 2 the inputs are replaced by t₀ = 0,
/// η₀ = +.
///
/// Throws arthur::Error when b₀ > 2 and (t₀, η₀) violates constraint (1) for
/// (a₀, b₀−2). The output is returned as computed; it is not re-checked
/// against constraint (1) for (a₀, b₀).
TransferredParams transfer_params(int t0, Sign eta0, int a0, int b0);

/// block_sign(a₀, b₀−2, t₀, η₀) == block_sign(a₀, b₀, t⁺, η⁺), reading
/// the left side as + for b₀ = 2. Evaluates the right side with the sign
/// formula directly, so a transferred t⁺ outside the range of constraint (1)
/// still yields a verdict. Throws like transfer_params.
bool check_sign_identity(int a0, int b0, int t0, Sign eta0);

/// Order on Jord(ψ⁺) from an order on Jord(ψ): (ρ, a₀, b₀) takes the place
/// of the distinguished prime copy. For b₀ = 2 there is no such place and
/// `insert_at` (0 ≤ insert_at ≤ size) must be given.
///
/// Throws arthur::Error when b₀ = 2 and `insert_at` is missing or out of
/// range, or when b₀ > 2 and the prime block is absent.
OrderedJord induced_order(const OrderedJord& psi, const TargetTriple& target,
                          std::optional<std::size_t> insert_at = std::nullopt);

/// Position of (ρ, a₀, b₀) in induced_order(psi, target, insert_at).
std::size_t induced_position(const OrderedJord& psi, const TargetTriple& target,
                             std::optional<std::size_t> insert_at = std::nullopt);

/// Insertion point for b₀ = 2 matching the canonical construction: after
/// every block with A < A₀, or at the bottom when a₀ = 1.
std::size_t canonical_insertion(const OrderedJord& psi, const TargetTriple& target);

/// Reverse of induced_order: the block at `position` (a copy of
/// (ρ, a₀, b₀)) goes back to (ρ, a₀, b₀−2), or is dropped when b₀ = 2.
OrderedJord restrict_order(const OrderedJord& psi_plus, const TargetTriple& target,
                           std::size_t position);

/// π⁺ as data: ψ⁺, its order, and the transferred parameters.
struct TransferRecord {
  ArthurParameter psi_plus;
  OrderedJord order;
  std::size_t position;
  PacketParams params;
};

/// Runs the whole transfer for one (ψ, order, (t, η)). The params of the
/// untouched blocks carry over; the distinguished position gets
/// transfer_params. For b₀ = 2 `insert_at` defaults to canonical_insertion.
TransferRecord transfer(const ArthurParameter& psi, const OrderedJord& order,
                        const PacketParams& params, const TargetTriple& target,
                        const LabelUniverse& labels,
                        std::optional<std::size_t> insert_at = std::nullopt);

/// One (block, t, η) entry of a position-free view of a parameter.
struct LabelledParam {
  JordanBlock block;
  int t;
  Sign eta;
  friend bool operator==(const LabelledParam&, const LabelledParam&) = default;
};

struct OrderIndependenceReport {
  std::size_t orders_checked = 0;
  std::size_t params_checked = 0;
  /// Human-readable descriptions; empty when every admissible order gave the
  /// same transferred parameter set.
  std::vector<std::string> discrepancies;
};

/// Every distinct order on `jord` (as a multiset, up to swapping equal
/// blocks) passing validate_order for `target`. Exponential; meant for
/// Jord with at most 6 blocks. Throws arthur::Error above 8 blocks.
std::vector<OrderedJord> admissible_orders(std::span<const JordanBlock> jord,
                                           const TargetTriple& target);

/// For each admissible order and each valid (t, η), transfers and compares
/// the resulting π⁺ as a sorted list of LabelledParam against the one
/// obtained from canonical_order. Discrepancies are reported, not thrown.
OrderIndependenceReport order_independence(const ArthurParameter& psi, const TargetTriple& target,
                                           const LabelUniverse& labels);

}  // namespace arthur
