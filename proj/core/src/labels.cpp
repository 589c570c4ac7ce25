#include "arthur/labels.hpp"

#include "arthur/error.hpp"

namespace arthur {

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::Orthogonal: return "orthogonal";
    case Parity::Symplectic: return "symplectic";
    case Parity::None: return "none";
  }
  return "none";
}

std::optional<Parity> parse_parity(std::string_view text) {
  if (text == "orthogonal") return Parity::Orthogonal;
  if (text == "symplectic") return Parity::Symplectic;
  if (text == "none") return Parity::None;
  return std::nullopt;
}

LabelUniverse::LabelUniverse(std::vector<CuspidalLabel> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const auto& l = labels_[i];
    if (l.id.empty()) throw Error("label with empty id");
    if (l.dim < 1) throw Error("label '" + l.id + "' has dim < 1");
    if (!l.self_dual && l.parity != Parity::None) {
      throw Error("label '" + l.id + "' is not self-dual but declares a parity");
    }
    if (l.self_dual && !l.dual.empty() && l.dual != l.id) {
      throw Error("self-dual label '" + l.id + "' names a different dual");
    }
    if (!index_.emplace(l.id, i).second) throw Error("duplicate label id '" + l.id + "'");
  }
  for (const auto& l : labels_) {
    if (l.self_dual || l.dual.empty()) continue;
    auto it = index_.find(l.dual);
    if (it == index_.end()) throw Error("label '" + l.id + "' names unknown dual '" + l.dual + "'");
    const auto& d = labels_[it->second];
    if (d.self_dual || d.dual != l.id) {
      throw Error("dual link between '" + l.id + "' and '" + d.id + "' is not symmetric");
    }
    if (d.dim != l.dim) throw Error("dual labels '" + l.id + "' and '" + d.id + "' differ in dim");
  }
}

bool LabelUniverse::contains(std::string_view id) const { return index_.find(id) != index_.end(); }

const CuspidalLabel& LabelUniverse::at(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("unknown label '" + std::string(id) + "'");
  return labels_[it->second];
}

const std::string& LabelUniverse::dual_of(std::string_view id) const {
  const auto& l = at(id);
  if (l.self_dual || l.dual.empty()) return l.id;
  return l.dual;
}

std::string_view to_string(GroupKind k) {
  switch (k) {
    case GroupKind::SOodd: return "SOodd";
    case GroupKind::Sp: return "Sp";
    case GroupKind::Oeven: return "Oeven";
  }
  return "Sp";
}

std::optional<GroupKind> parse_group_kind(std::string_view text) {
  if (text == "SOodd") return GroupKind::SOodd;
  if (text == "Sp") return GroupKind::Sp;
  if (text == "Oeven") return GroupKind::Oeven;
  return std::nullopt;
}

}  // namespace arthur
