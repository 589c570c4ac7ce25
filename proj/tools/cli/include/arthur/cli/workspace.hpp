#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arthur/archimedean.hpp"
#include "arthur/eisenstein.hpp"
#include "arthur/error.hpp"
#include "arthur/jordan.hpp"
#include "arthur/labels.hpp"
#include "arthur/lcontext.hpp"
#include "arthur/packets.hpp"

namespace arthur::cli {

/// A schema violation located by a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct NamedParameter {
  std::string name;
  std::vector<JordanBlock> jord;
  /// Jord indices from smallest to largest.
  std::optional<std::vector<std::size_t>> order;
  /// Indexed by Jord index, not by order position.
  std::optional<std::vector<int>> t;
  std::optional<std::vector<Sign>> eta;

  /// Blocks listed in `order` (Jord order when absent).
  OrderedJord ordered() const;
  /// Jord indices from smallest to largest; the identity when no order.
  std::vector<std::size_t> order_or_identity() const;
  /// (t, η) by order position; requires both t and eta.
  std::optional<PacketParams> positional_params() const;
};

struct NamedArch {
  std::string name;
  /// Only "real" is accepted; kept when given so files round-trip.
  std::optional<std::string> place;
  std::vector<ArchBlock> blocks;
};

struct NamedGlobal {
  std::string name;
  GlobalJord jord;
};

struct Workspace {
  std::vector<CuspidalLabel> label_list;
  LabelUniverse labels;
  GroupType group;
  LContext lcontext;
  std::vector<NamedParameter> parameters;
  std::vector<NamedArch> arch;
  std::vector<NamedGlobal> global;

  /// Throws arthur::Error naming the missing entry.
  const NamedParameter& parameter(std::string_view name) const;
  const NamedArch& arch_entry(std::string_view name) const;
  const NamedGlobal& global_entry(std::string_view name) const;

  ArthurParameter arthur_parameter(const NamedParameter& p) const { return {group, p.jord}; }
};

/// Throws SchemaError (with a JSON pointer) on malformed input and on
/// dangling label ids.
Workspace parse_workspace(std::string_view text);

/// Canonical form: sorted keys, two-space indent, trailing newline.
std::string serialize_workspace(const Workspace& ws);

}  // namespace arthur::cli
