#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arthur/sign.hpp"

namespace arthur {

/// Parity of a self-dual representation. Multiplies like a sign with
/// Symplectic = −1.
enum class Parity { Orthogonal, Symplectic, None };

constexpr Sign parity_sign(Parity p) {
  return p == Parity::Symplectic ? Sign::Minus : Sign::Plus;
}
constexpr Parity parity_from_sign(Sign s) {
  return s == Sign::Minus ? Parity::Symplectic : Parity::Orthogonal;
}
std::string_view to_string(Parity p);
std::optional<Parity> parse_parity(std::string_view text);

/// A unitary cuspidal representation of GL(dim), known only by its declared
/// attributes.
struct CuspidalLabel {
  std::string id;
  int dim = 1;
  bool self_dual = true;
  Parity parity = Parity::None;
  /// Id of the dual label. Empty means "self" for self-dual labels.
  std::string dual;

  friend bool operator==(const CuspidalLabel& a, const CuspidalLabel& b) {
    return a.id == b.id;
  }
};

/// The set of declared labels. Construction checks the label invariants
/// (positive dim, parity only on self-dual labels, dual links symmetric).
class LabelUniverse {
 public:
  LabelUniverse() = default;
  explicit LabelUniverse(std::vector<CuspidalLabel> labels);

  bool contains(std::string_view id) const;
  /// Throws arthur::Error for an undeclared id.
  const CuspidalLabel& at(std::string_view id) const;
  /// Id of the dual label; the id itself for self-dual labels.
  const std::string& dual_of(std::string_view id) const;

  const std::vector<CuspidalLabel>& labels() const { return labels_; }

 private:
  std::vector<CuspidalLabel> labels_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class GroupKind { SOodd, Sp, Oeven };

std::string_view to_string(GroupKind k);
std::optional<GroupKind> parse_group_kind(std::string_view text);

/// The representation r_G entering the normalization factor.
enum class RgRep { Sym2, Wedge2 };

struct GroupType {
  GroupKind kind = GroupKind::Sp;
  /// m*_G, dimension of the standard representation of the dual group.
  int m_star = 1;
  /// Hasse invariant ε_G of the defining form; + when quasi-split.
  Sign epsilon = Sign::Plus;

  constexpr RgRep r_g() const {
    return kind == GroupKind::SOodd ? RgRep::Wedge2 : RgRep::Sym2;
  }
  /// Parity a good-parity block must have: the dual of SO(2n+1) is
  /// symplectic, the other duals are orthogonal.
  constexpr Parity dual_parity() const {
    return kind == GroupKind::SOodd ? Parity::Symplectic : Parity::Orthogonal;
  }

  friend bool operator==(const GroupType&, const GroupType&) = default;
};

}  // namespace arthur
