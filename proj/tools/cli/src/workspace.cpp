#include "arthur/cli/workspace.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace arthur::cli {

using nlohmann::json;

namespace {

std::string child(const std::string& ptr, std::string_view key) {
  std::string out = ptr + "/";
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string child(const std::string& ptr, std::size_t index) {
  return ptr + "/" + std::to_string(index);
}

// Reads one JSON object, remembering which keys were consumed so leftovers
// can be reported.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string ptr) : j_(j), ptr_(std::move(ptr)) {
    if (!j_.is_object()) throw SchemaError(ptr_.empty() ? "/" : ptr_, "expected an object");
  }

  bool has(std::string_view key) const { return j_.contains(key); }

  const json& at(std::string_view key) {
    auto it = j_.find(key);
    if (it == j_.end()) throw SchemaError(child(ptr_, key), "missing required key");
    seen_.insert(std::string(key));
    return *it;
  }

  std::string path(std::string_view key) const { return child(ptr_, key); }

  std::string string(std::string_view key) {
    const json& v = at(key);
    if (!v.is_string()) throw SchemaError(path(key), "expected a string");
    return v.get<std::string>();
  }

  std::int64_t integer(std::string_view key) {
    const json& v = at(key);
    if (!v.is_number_integer()) throw SchemaError(path(key), "expected an integer");
    return v.get<std::int64_t>();
  }

  int positive(std::string_view key) {
    const std::int64_t v = integer(key);
    if (v < 1 || v > (1 << 20)) throw SchemaError(path(key), "expected a positive integer");
    return static_cast<int>(v);
  }

  bool boolean(std::string_view key) {
    const json& v = at(key);
    if (!v.is_boolean()) throw SchemaError(path(key), "expected a boolean");
    return v.get<bool>();
  }

  const json& array(std::string_view key) {
    const json& v = at(key);
    if (!v.is_array()) throw SchemaError(path(key), "expected an array");
    return v;
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.contains(key)) throw SchemaError(child(ptr_, key), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string ptr_;
  std::set<std::string> seen_;
};

Sign parse_sign(const json& v, const std::string& ptr) {
  if (v.is_string()) {
    if (v == "+") return Sign::Plus;
    if (v == "-") return Sign::Minus;
  }
  throw SchemaError(ptr, "expected \"+\" or \"-\"");
}

std::string sign_text(Sign s) { return std::string(1, to_char(s)); }

const std::string& label_id(const json& v, const std::string& ptr,
                            const std::map<std::string, CuspidalLabel>& known) {
  if (!v.is_string()) throw SchemaError(ptr, "expected a label id");
  auto it = known.find(v.get<std::string>());
  if (it == known.end()) throw SchemaError(ptr, "unknown label id '" + v.get<std::string>() + "'");
  return it->first;
}

template <class T>
const T& find_named(const std::vector<T>& items, std::string_view name, std::string_view what) {
  for (const auto& item : items) {
    if (item.name == name) return item;
  }
  throw Error("no " + std::string(what) + " named '" + std::string(name) + "'");
}

void require_unique(std::set<std::string>& names, const std::string& name, const std::string& ptr) {
  if (!names.insert(name).second) throw SchemaError(ptr, "duplicate name '" + name + "'");
}

std::vector<CuspidalLabel> parse_labels(const json& arr, const std::string& ptr) {
  std::vector<CuspidalLabel> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    ObjectReader r(arr[i], child(ptr, i));
    CuspidalLabel l;
    l.id = r.string("id");
    if (l.id.empty()) throw SchemaError(r.path("id"), "label id must be nonempty");
    l.dim = r.positive("dim");
    l.self_dual = r.boolean("self_dual");
    const std::string parity = r.string("parity");
    auto p = parse_parity(parity);
    if (!p) throw SchemaError(r.path("parity"), "expected orthogonal, symplectic or none");
    l.parity = *p;
    if (l.parity != Parity::None && !l.self_dual) {
      throw SchemaError(r.path("parity"), "only self-dual labels carry a parity");
    }
    if (r.has("dual")) l.dual = r.string("dual");
    r.finish();
    out.push_back(std::move(l));
  }
  return out;
}

GroupType parse_group(const json& j, const std::string& ptr) {
  ObjectReader r(j, ptr);
  GroupType g;
  auto kind = parse_group_kind(r.string("kind"));
  if (!kind) throw SchemaError(r.path("kind"), "expected SOodd, Sp or Oeven");
  g.kind = *kind;
  g.m_star = r.positive("m_star");
  g.epsilon = parse_sign(r.at("epsilon"), r.path("epsilon"));
  r.finish();
  return g;
}

NamedParameter parse_parameter(const json& j, const std::string& ptr,
                               const std::map<std::string, CuspidalLabel>& known) {
  ObjectReader r(j, ptr);
  NamedParameter p;
  p.name = r.string("name");
  const json& jord = r.array("jord");
  const std::string jptr = r.path("jord");
  for (std::size_t i = 0; i < jord.size(); ++i) {
    ObjectReader b(jord[i], child(jptr, i));
    JordanBlock block;
    block.rho = label_id(b.at("rho"), b.path("rho"), known);
    block.a = b.positive("a");
    block.b = b.positive("b");
    if (b.has("twist_num") || b.has("twist_den")) {
      const std::int64_t num = b.integer("twist_num");
      const std::int64_t den = b.integer("twist_den");
      if (den == 0) throw SchemaError(b.path("twist_den"), "denominator must be nonzero");
      block.twist = Rational(num, den);
    }
    b.finish();
    p.jord.push_back(std::move(block));
  }
  const std::size_t n = p.jord.size();
  if (r.has("order")) {
    const json& order = r.array("order");
    if (order.size() != n) throw SchemaError(r.path("order"), "must list every Jord index once");
    std::vector<std::size_t> idx;
    std::vector<bool> used(n, false);
    for (std::size_t k = 0; k < order.size(); ++k) {
      const json& v = order[k];
      const std::string vptr = child(r.path("order"), k);
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
          v.get<std::int64_t>() >= static_cast<std::int64_t>(n)) {
        throw SchemaError(vptr, "expected a Jord index");
      }
      const auto i = v.get<std::size_t>();
      if (used[i]) throw SchemaError(vptr, "index " + std::to_string(i) + " repeated");
      used[i] = true;
      idx.push_back(i);
    }
    p.order = std::move(idx);
  }
  if (r.has("t")) {
    const json& t = r.array("t");
    if (t.size() != n) throw SchemaError(r.path("t"), "needs one entry per Jord index");
    std::vector<int> ts;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (!t[k].is_number_integer()) throw SchemaError(child(r.path("t"), k), "expected an integer");
      ts.push_back(t[k].get<int>());
    }
    p.t = std::move(ts);
  }
  if (r.has("eta")) {
    const json& eta = r.array("eta");
    if (eta.size() != n) throw SchemaError(r.path("eta"), "needs one entry per Jord index");
    std::vector<Sign> es;
    for (std::size_t k = 0; k < eta.size(); ++k) es.push_back(parse_sign(eta[k], child(r.path("eta"), k)));
    p.eta = std::move(es);
  }
  r.finish();
  return p;
}

NamedArch parse_arch(const json& j, const std::string& ptr) {
  ObjectReader r(j, ptr);
  NamedArch a;
  a.name = r.string("name");
  if (r.has("place")) {
    a.place = r.string("place");
    if (*a.place != "real") throw SchemaError(r.path("place"), "only the real place is supported");
  }
  const json& blocks = r.array("blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    ObjectReader b(blocks[i], child(r.path("blocks"), i));
    ArchBlock blk;
    blk.a_delta = b.positive("a_delta");
    blk.b = b.positive("b");
    if (b.has("ell")) blk.ell = static_cast<int>(b.integer("ell"));
    b.finish();
    a.blocks.push_back(blk);
  }
  r.finish();
  return a;
}

NamedGlobal parse_global(const json& j, const std::string& ptr,
                         const std::map<std::string, CuspidalLabel>& known) {
  ObjectReader r(j, ptr);
  NamedGlobal g;
  g.name = r.string("name");
  const json& pairs = r.array("pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ObjectReader p(pairs[i], child(r.path("pairs"), i));
    GlobalPair pair;
    pair.rho = label_id(p.at("rho"), p.path("rho"), known);
    if (!known.at(pair.rho).self_dual) {
      throw SchemaError(p.path("rho"), "global pairs need self-dual labels; '" + pair.rho + "' is not");
    }
    pair.b = p.positive("b");
    p.finish();
    g.jord.pairs.push_back(std::move(pair));
  }
  r.finish();
  return g;
}

std::vector<LContext::Pair> parse_pairs(const json& arr, const std::string& ptr,
                                        const std::map<std::string, CuspidalLabel>& known) {
  std::vector<LContext::Pair> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string pptr = child(ptr, i);
    if (!arr[i].is_array() || arr[i].size() != 2) throw SchemaError(pptr, "expected a pair of label ids");
    out.emplace_back(label_id(arr[i][0], child(pptr, 0), known), label_id(arr[i][1], child(pptr, 1), known));
  }
  return out;
}

}  // namespace

OrderedJord NamedParameter::ordered() const {
  OrderedJord out;
  for (std::size_t i : order_or_identity()) out.blocks.push_back(jord[i]);
  return out;
}

std::vector<std::size_t> NamedParameter::order_or_identity() const {
  if (order) return *order;
  std::vector<std::size_t> idx(jord.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return idx;
}

std::optional<PacketParams> NamedParameter::positional_params() const {
  if (!t || !eta) return std::nullopt;
  PacketParams p;
  for (std::size_t i : order_or_identity()) {
    p.t.push_back((*t)[i]);
    p.eta.push_back((*eta)[i]);
  }
  return p;
}

const NamedParameter& Workspace::parameter(std::string_view name) const {
  return find_named(parameters, name, "parameter");
}
const NamedArch& Workspace::arch_entry(std::string_view name) const {
  return find_named(arch, name, "arch entry");
}
const NamedGlobal& Workspace::global_entry(std::string_view name) const {
  return find_named(global, name, "global Jord");
}

Workspace parse_workspace(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("/", std::string("malformed JSON: ") + e.what());
  }
  ObjectReader root(doc, "");
  Workspace ws;

  ws.label_list = parse_labels(root.array("labels"), "/labels");
  std::map<std::string, CuspidalLabel> known;
  for (std::size_t i = 0; i < ws.label_list.size(); ++i) {
    const auto& l = ws.label_list[i];
    if (!known.emplace(l.id, l).second) {
      throw SchemaError(child(child("/labels", i), "id"), "duplicate label id '" + l.id + "'");
    }
  }
  for (std::size_t i = 0; i < ws.label_list.size(); ++i) {
    const auto& l = ws.label_list[i];
    if (!l.dual.empty() && !known.contains(l.dual)) {
      throw SchemaError(child(child("/labels", i), "dual"), "unknown label id '" + l.dual + "'");
    }
  }
  try {
    ws.labels = LabelUniverse(ws.label_list);
  } catch (const Error& e) {
    throw SchemaError("/labels", e.what());
  }

  ws.group = parse_group(root.at("group"), "/group");

  std::set<std::string, std::less<>> universe;
  for (const auto& l : ws.label_list) universe.insert(l.id);
  std::set<std::string, std::less<>> poles;
  std::vector<LContext::Pair> nonvanishing, vanishing;
  if (root.has("lfacts")) {
    ObjectReader r(root.at("lfacts"), "/lfacts");
    if (r.has("rg_pole_at_1")) {
      const json& arr = r.array("rg_pole_at_1");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        poles.insert(label_id(arr[i], child(r.path("rg_pole_at_1"), i), known));
      }
    }
    if (r.has("central_nonvanishing")) {
      nonvanishing = parse_pairs(r.array("central_nonvanishing"), r.path("central_nonvanishing"), known);
    }
    if (r.has("central_vanishing")) {
      vanishing = parse_pairs(r.array("central_vanishing"), r.path("central_vanishing"), known);
    }
    r.finish();
  }
  try {
    ws.lcontext = LContext(universe, poles, nonvanishing, vanishing);
  } catch (const Error& e) {
    throw SchemaError("/lfacts", e.what());
  }

  std::set<std::string> names;
  if (root.has("parameters")) {
    const json& arr = root.array("parameters");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      ws.parameters.push_back(parse_parameter(arr[i], child("/parameters", i), known));
      require_unique(names, ws.parameters.back().name, child(child("/parameters", i), "name"));
    }
  }
  names.clear();
  if (root.has("arch")) {
    const json& arr = root.array("arch");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      ws.arch.push_back(parse_arch(arr[i], child("/arch", i)));
      require_unique(names, ws.arch.back().name, child(child("/arch", i), "name"));
    }
  }
  names.clear();
  if (root.has("global")) {
    const json& arr = root.array("global");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      ws.global.push_back(parse_global(arr[i], child("/global", i), known));
      require_unique(names, ws.global.back().name, child(child("/global", i), "name"));
    }
  }
  root.finish();
  return ws;
}

std::string serialize_workspace(const Workspace& ws) {
  json doc;
  doc["labels"] = json::array();
  for (const auto& l : ws.label_list) {
    json j{{"id", l.id}, {"dim", l.dim}, {"self_dual", l.self_dual},
           {"parity", std::string(to_string(l.parity))}};
    if (!l.dual.empty()) j["dual"] = l.dual;
    doc["labels"].push_back(std::move(j));
  }
  doc["group"] = {{"kind", std::string(to_string(ws.group.kind))},
                  {"m_star", ws.group.m_star},
                  {"epsilon", sign_text(ws.group.epsilon)}};

  json lfacts{{"rg_pole_at_1", json::array()},
              {"central_nonvanishing", json::array()},
              {"central_vanishing", json::array()}};
  for (const auto& id : ws.lcontext.rg_poles()) lfacts["rg_pole_at_1"].push_back(id);
  for (const auto& [x, y] : ws.lcontext.nonvanishing()) lfacts["central_nonvanishing"].push_back(json::array({x, y}));
  for (const auto& [x, y] : ws.lcontext.vanishing()) lfacts["central_vanishing"].push_back(json::array({x, y}));
  doc["lfacts"] = std::move(lfacts);

  doc["parameters"] = json::array();
  for (const auto& p : ws.parameters) {
    json j{{"name", p.name}, {"jord", json::array()}};
    for (const auto& b : p.jord) {
      json jb{{"rho", b.rho}, {"a", b.a}, {"b", b.b}};
      if (!b.is_unitary()) {
        jb["twist_num"] = b.twist.numerator();
        jb["twist_den"] = b.twist.denominator();
      }
      j["jord"].push_back(std::move(jb));
    }
    if (p.order) j["order"] = *p.order;
    if (p.t) j["t"] = *p.t;
    if (p.eta) {
      j["eta"] = json::array();
      for (Sign s : *p.eta) j["eta"].push_back(sign_text(s));
    }
    doc["parameters"].push_back(std::move(j));
  }

  doc["arch"] = json::array();
  for (const auto& a : ws.arch) {
    json j{{"name", a.name}, {"blocks", json::array()}};
    if (a.place) j["place"] = *a.place;
    for (const auto& b : a.blocks) {
      json jb{{"a_delta", b.a_delta}, {"b", b.b}};
      if (b.ell) jb["ell"] = *b.ell;
      j["blocks"].push_back(std::move(jb));
    }
    doc["arch"].push_back(std::move(j));
  }

  doc["global"] = json::array();
  for (const auto& g : ws.global) {
    json j{{"name", g.name}, {"pairs", json::array()}};
    for (const auto& p : g.jord.pairs) j["pairs"].push_back({{"rho", p.rho}, {"b", p.b}});
    doc["global"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace arthur::cli
