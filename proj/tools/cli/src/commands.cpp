#include "arthur/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "arthur/arthur.hpp"
#include "arthur/cli/workspace.hpp"

namespace arthur::cli {

using nlohmann::json;

namespace {

// Raised for argument combinations CLI11 cannot express.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string workspace;
  bool allow_wide_twists = false;

  std::string param;
  std::string rho;
  int a0 = 0;
  int b0 = 0;
  std::optional<std::string> s0;
  std::optional<std::int64_t> s0_x2;
  std::optional<std::size_t> position;

  bool count = false;
  bool list = false;
  std::optional<std::string> epsilon;

  bool validate = false;
  bool canonical = false;
  std::string role = "base";
  std::optional<std::size_t> distinguished;

  bool normal_form = false;
  bool nonvanishing = false;
  std::vector<std::int64_t> x2;
  std::int64_t from_x2 = 0;
  std::int64_t to_x2 = 0;
  std::int64_t x_x2 = 0;

  std::string arch;
  std::vector<int> a_tau;
  bool check_regular = false;

  std::string global;
  std::vector<std::string> local;
  std::string regular = "unknown";
  std::string cohomological = "unknown";
  std::string condition6 = "unknown";
};

std::string sign_text(Sign s) { return std::string(1, to_char(s)); }

Sign parse_sign_arg(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::Plus;
  if (s == "-" || s == "minus") return Sign::Minus;
  throw UsageError("expected + or -, got '" + s + "'");
}

Tribool parse_tribool(const std::string& s) {
  if (s == "true") return Tribool::True;
  if (s == "false") return Tribool::False;
  if (s == "unknown") return Tribool::Unknown;
  throw UsageError("expected true, false or unknown, got '" + s + "'");
}

Workspace load(const Options& o) {
  if (o.workspace.empty()) throw UsageError("--workspace is required for this subcommand");
  std::ifstream in(o.workspace, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + o.workspace + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

Rational s0_of(const Options& o) {
  if (o.s0.has_value() == o.s0_x2.has_value()) {
    throw UsageError("give exactly one of --s0 and --s0-x2");
  }
  if (o.s0_x2) return Rational(*o.s0_x2, 2);
  return parse_rational(*o.s0);
}

HalfInt half_s0_of(const Options& o) {
  const Rational q = s0_of(o);
  if (!is_half_integer(q)) throw UsageError("s0 must be a half-integer here");
  return to_half_int(q);
}

json index_list(const std::vector<std::size_t>& positions, const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (std::size_t p : positions) out.push_back(idx[p]);
  return out;
}

json block_json(const JordanBlock& b) {
  json j{{"rho", b.rho}, {"a", b.a}, {"b", b.b}};
  if (!b.is_unitary()) {
    j["twist_num"] = b.twist.numerator();
    j["twist_den"] = b.twist.denominator();
  }
  return j;
}

json order_violations_json(const std::vector<OrderViolation>& vs, const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (const auto& v : vs) {
    out.push_back({{"kind", std::string(to_string(v.kind))},
                   {"blocks", index_list(v.positions, idx)},
                   {"detail", v.detail}});
  }
  return out;
}

std::optional<std::size_t> position_of_index(const std::vector<std::size_t>& idx, std::size_t i) {
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (idx[p] == i) return p;
  }
  return std::nullopt;
}

int cmd_validate(const Options& o, json& report) {
  const Workspace ws = load(o);
  const TwistPolicy policy = o.allow_wide_twists ? TwistPolicy::Allow : TwistPolicy::Reject;
  json violations = json::array();
  for (const auto& p : ws.parameters) {
    auto add = [&](std::string_view kind, std::optional<std::size_t> block, const std::string& detail) {
      json v{{"parameter", p.name}, {"kind", std::string(kind)}, {"detail", detail}};
      if (block) v["block"] = *block;
      violations.push_back(std::move(v));
    };
    const auto pv = validate_parameter(ws.arthur_parameter(p), ws.labels, policy);
    for (const auto& v : pv) add(to_string(v.kind), v.block, v.detail);
    if (!pv.empty()) continue;

    const auto idx = p.order_or_identity();
    const OrderedJord ordered = p.ordered();
    for (const auto& v : check_property_p(ordered.blocks)) {
      add(to_string(v.kind), idx[v.positions.front()], v.detail);
    }
    if (p.t.has_value() != p.eta.has_value()) {
      add("IncompleteParams", std::nullopt, "t and eta must be given together");
    } else if (auto params = p.positional_params()) {
      for (const auto& v : validate_params(ordered, *params, ws.group.epsilon)) {
        std::optional<std::size_t> block;
        if (v.position) block = idx[*v.position];
        add(to_string(v.kind), block, v.detail);
      }
    }
  }
  const bool ok = violations.empty();
  report["violations"] = std::move(violations);
  return ok ? kExitOk : kExitValidation;
}

int cmd_packet(const Options& o, json& report) {
  if (o.count && o.list) throw UsageError("--count and --list are exclusive");
  const Workspace ws = load(o);
  const auto& p = ws.parameter(o.param);
  const Sign eps = o.epsilon ? parse_sign_arg(*o.epsilon) : ws.group.epsilon;
  const auto idx = p.order_or_identity();
  report["parameter"] = p.name;
  report["epsilon"] = sign_text(eps);
  if (!o.list) {
    report["count"] = count_params(p.jord, eps);
    return kExitOk;
  }
  const auto all = enumerate_params(p.ordered(), eps);
  json params = json::array();
  for (const auto& pp : all) {
    std::vector<int> t(idx.size());
    json eta = json::array();
    std::vector<Sign> e(idx.size());
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      t[idx[pos]] = pp.t[pos];
      e[idx[pos]] = pp.eta[pos];
    }
    for (Sign s : e) eta.push_back(sign_text(s));
    params.push_back({{"t", t}, {"eta", eta}});
  }
  report["count"] = all.size();
  report["params"] = std::move(params);
  return kExitOk;
}

int cmd_order(const Options& o, json& report) {
  if (o.validate == o.canonical) throw UsageError("give exactly one of --validate and --canonical");
  const Workspace ws = load(o);
  const auto& p = ws.parameter(o.param);
  const TargetTriple target = TargetTriple::make(o.rho, o.a0, o.b0);
  const auto idx = p.order_or_identity();
  report["parameter"] = p.name;

  if (o.canonical) {
    const OrderedJord c = canonical_order(p.jord, target);
    std::vector<bool> used(p.jord.size(), false);
    json order = json::array();
    for (const auto& b : c.blocks) {
      for (std::size_t i = 0; i < p.jord.size(); ++i) {
        if (!used[i] && p.jord[i] == b) {
          used[i] = true;
          order.push_back(i);
          break;
        }
      }
    }
    report["order"] = std::move(order);
    return kExitOk;
  }

  OrderRole role;
  if (o.role == "base") {
    role = OrderRole::Base;
  } else if (o.role == "plus") {
    role = OrderRole::Plus;
  } else {
    throw UsageError("--role must be base or plus");
  }
  std::optional<std::size_t> d;
  if (o.distinguished) {
    d = position_of_index(idx, *o.distinguished);
    if (!d) throw UsageError("--distinguished is not a Jord index");
  }
  const auto vs = validate_order(p.ordered(), target, role, d);
  report["violations"] = order_violations_json(vs, idx);
  return vs.empty() ? kExitOk : kExitValidation;
}

int cmd_pole_order(const Options& o, json& report) {
  const Workspace ws = load(o);
  const auto& p = ws.parameter(o.param);
  const Rational s0 = s0_of(o);
  ArthurParameter bp{ws.group, {}};
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < p.jord.size(); ++i) {
    if (good_parity(p.jord[i], ws.group, ws.labels)) {
      bp.blocks.push_back(p.jord[i]);
      where.push_back(i);
    }
  }
  report["parameter"] = p.name;
  report["order"] = r_order(bp, o.rho, o.a0, s0);
  json contributors = json::array();
  if (is_half_integer(s0)) {
    const int b0 = static_cast<int>(to_half_int(s0).doubled()) + 1;
    for (std::size_t k : pole_contributors(bp.blocks, o.rho, o.a0, b0)) contributors.push_back(where[k]);
  }
  report["contributors"] = std::move(contributors);
  return kExitOk;
}

int cmd_transfer(const Options& o, json& report) {
  const Workspace ws = load(o);
  const auto& p = ws.parameter(o.param);
  const TargetTriple target = TargetTriple::make(o.rho, o.a0, o.b0);
  const ArthurParameter psi = ws.arthur_parameter(p);
  const OrderedJord ordered = p.ordered();
  const auto idx = p.order_or_identity();
  report["parameter"] = p.name;
  report["target"] = {{"rho", target.rho}, {"a0", target.a0}, {"b0", target.b0}};

  const auto vs = validate_order(ordered, target, OrderRole::Base);
  if (!vs.empty()) {
    report["violations"] = order_violations_json(vs, idx);
    return kExitValidation;
  }

  const ArthurParameter plus = build_psi_plus(psi, target, ws.labels);
  std::optional<std::size_t> insert_at = o.position;
  if (target.has_prime() && insert_at) throw UsageError("--position only applies when b0 = 2");
  if (!target.has_prime() && !insert_at) insert_at = canonical_insertion(ordered, target);
  const std::size_t pos = induced_position(ordered, target, insert_at);

  // Jord(ψ⁺) keeps ψ's indices: the distinguished copy is rewritten in place,
  // or the new block is appended when b₀ = 2.
  std::vector<JordanBlock> plus_jord = p.jord;
  std::vector<std::size_t> plus_idx = idx;
  std::size_t new_index;
  if (target.has_prime()) {
    new_index = idx[pos];
    plus_jord[new_index] = target.plus_block();
  } else {
    new_index = plus_jord.size();
    plus_jord.push_back(target.plus_block());
    plus_idx.insert(plus_idx.begin() + static_cast<std::ptrdiff_t>(pos), new_index);
  }
  json jord = json::array();
  for (const auto& b : plus_jord) jord.push_back(block_json(b));
  report["psi_plus"] = {{"m_star", plus.group.m_star}, {"jord", std::move(jord)}};
  report["order"] = plus_idx;
  report["position"] = pos;
  report["block"] = new_index;
  report["pi_plus_nonnull"] = "unknown";

  const OrderedJord induced = induced_order(ordered, target, insert_at);
  report["order_violations_plus"] =
      order_violations_json(validate_order(induced, target, OrderRole::Plus, pos), plus_idx);

  if (auto params = p.positional_params()) {
    const TransferRecord rec = transfer(psi, ordered, *params, target, ws.labels, insert_at);
    std::vector<int> t(plus_jord.size());
    std::vector<Sign> e(plus_jord.size());
    for (std::size_t q = 0; q < plus_idx.size(); ++q) {
      t[plus_idx[q]] = rec.params.t[q];
      e[plus_idx[q]] = rec.params.eta[q];
    }
    json eta = json::array();
    for (Sign s : e) eta.push_back(sign_text(s));
    report["t"] = t;
    report["eta"] = std::move(eta);
    const int t0 = target.has_prime() ? params->t[pos] : 0;
    const Sign eta0 = target.has_prime() ? params->eta[pos] : Sign::Plus;
    report["checks"] = {
        {"constraint1", constraint1_holds(target.a0, target.b0, t[new_index], e[new_index])},
        {"sign_identity", check_sign_identity(target.a0, target.b0, t0, eta0)},
    };
  }
  return kExitOk;
}

int cmd_jac(const Options& o, json& report) {
  if (o.normal_form == o.nonvanishing) throw UsageError("give exactly one of --normal-form and --nonvanishing");
  if (o.normal_form) {
    std::vector<HalfInt> word;
    for (auto d : o.x2) word.push_back(HalfInt::from_doubled(d));
    json nf = json::array();
    for (HalfInt h : jac_normal_form(word)) nf.push_back(h.doubled());
    report["normal_form_x2"] = std::move(nf);
    return kExitOk;
  }
  const Workspace ws = load(o);
  const auto& p = ws.parameter(o.param);
  const Segment seg(HalfInt::from_doubled(o.from_x2), HalfInt::from_doubled(o.to_x2));
  report["parameter"] = p.name;
  report["nonvanishing_possible"] = jac_nonvanishing_necessary(ws.arthur_parameter(p), o.rho, seg);
  return kExitOk;
}

int cmd_irreducible(const Options& o, json& report) {
  const Workspace ws = load(o);
  const auto& p = ws.parameter(o.param);
  report["parameter"] = p.name;
  report["verdict"] = std::string(
      to_string(irreducible_cuspidal_twist(ws.arthur_parameter(p), o.rho, HalfInt::from_doubled(o.x_x2))));
  return kExitOk;
}

json entries_json(const InfChar& chi) {
  json out = json::array();
  for (HalfInt h : chi.entries) out.push_back(h.doubled());
  return out;
}

int cmd_infchar(const Options& o, json& report) {
  const Workspace ws = load(o);
  const auto& a = ws.arch_entry(o.arch);
  InfChar chi;
  if (o.a_tau.empty()) {
    if (o.s0 || o.s0_x2) throw UsageError("s0 needs --a-tau");
    chi = inf_char(a.blocks);
  } else {
    chi = combined_inf_char(a.blocks, o.a_tau, half_s0_of(o));
  }
  const bool regular = is_regular(chi);
  report["arch"] = a.name;
  report["entries_x2"] = entries_json(chi);
  report["regular"] = regular;
  return (o.check_regular && !regular) ? kExitValidation : kExitOk;
}

int cmd_arch_order(const Options& o, json& report) {
  const Workspace ws = load(o);
  const auto& a = ws.arch_entry(o.arch);
  const HalfInt s0 = half_s0_of(o);
  json factors = json::array();
  for (int t : o.a_tau) {
    for (const auto& b : a.blocks) {
      factors.push_back({{"a_tau", t}, {"a_delta", b.a_delta}, {"b", b.b},
                         {"order", arch_lfactor_order(t, b.a_delta, b.b, s0)}});
    }
  }
  report["arch"] = a.name;
  report["order"] = normalization_order(o.a_tau, a.blocks, s0);
  report["regular"] = is_regular(combined_inf_char(a.blocks, o.a_tau, s0));
  report["factors"] = std::move(factors);
  return kExitOk;
}

int cmd_eisenstein(const Options& o, json& report) {
  const Workspace ws = load(o);
  const auto& g = ws.global_entry(o.global);
  Hypotheses hyp{parse_tribool(o.regular), parse_tribool(o.cohomological), parse_tribool(o.condition6)};
  std::vector<Tribool> local;
  for (const auto& s : o.local) local.push_back(parse_tribool(s));
  const EisensteinVerdict v = eisenstein_verdict(g.jord, o.rho, s0_of(o), ws.lcontext, hyp);
  report["global"] = g.name;
  report["kind"] = std::string(to_string(v.kind));
  report["reasons"] = {{"cond1", v.reasons.cond1}, {"cond2", std::string(to_string(v.reasons.cond2))}};
  report["hypotheses"] = {
      {"regular_infinitesimal_character", std::string(to_string(hyp.regular_infinitesimal_character))},
      {"cohomological", std::string(to_string(hyp.cohomological))},
      {"condition6", std::string(to_string(hyp.condition6))},
  };
  report["assumptions"] = v.assumptions;
  report["residue"] = std::string(to_string(residue_verdict(v, local)));
  return kExitOk;
}

void add_target(CLI::App* sub, Options& o, bool with_b0 = true) {
  sub->add_option("--rho", o.rho, "cuspidal label id")->required();
  sub->add_option("--a0", o.a0, "a0 of the target")->required()->check(CLI::PositiveNumber);
  if (with_b0) sub->add_option("--b0", o.b0, "b0 of the target")->required()->check(CLI::Range(2, 1 << 20));
}

void add_s0(CLI::App* sub, Options& o) {
  sub->add_option("--s0", o.s0, "evaluation point as a rational, e.g. 3/2");
  sub->add_option("--s0-x2", o.s0_x2, "evaluation point, doubled");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact combinatorics of Arthur parameters, packets and intertwining poles", "arthur-calc"};
  app.require_subcommand(1);
  app.add_option("-w,--workspace", o.workspace, "workspace JSON file");
  app.add_flag("--allow-wide-twists", o.allow_wide_twists, "accept nonunitary twists with |x| >= 1/2");

  std::map<CLI::App*, std::function<int(const Options&, json&)>> handlers;

  auto* validate = app.add_subcommand("validate", "check every parameter of the workspace");
  handlers[validate] = cmd_validate;

  auto* packet = app.add_subcommand("packet", "count or list packet parameters (t, eta)");
  packet->add_option("--param", o.param, "parameter name")->required();
  packet->add_flag("--count", o.count, "print the number of parameters (default)");
  packet->add_flag("--list", o.list, "print every parameter, indexed by Jord index");
  packet->add_option("--epsilon", o.epsilon, "override epsilon_G (+ or -)");
  handlers[packet] = cmd_packet;

  auto* order = app.add_subcommand("order", "validate an order or build the canonical one");
  order->add_option("--param", o.param, "parameter name")->required();
  add_target(order, o);
  order->add_flag("--validate", o.validate, "check the parameter's order");
  order->add_flag("--canonical", o.canonical, "print a canonical admissible order");
  order->add_option("--role", o.role, "base (order on psi) or plus (order on psi+)");
  order->add_option("--distinguished", o.distinguished, "Jord index of the distinguished copy");
  handlers[order] = cmd_order;

  auto* pole = app.add_subcommand("pole-order", "order of r(s, rho, a0, psi) at s0");
  pole->add_option("--param", o.param, "parameter name")->required();
  add_target(pole, o, false);
  add_s0(pole, o);
  handlers[pole] = cmd_pole_order;

  auto* transfer_cmd = app.add_subcommand("transfer", "psi -> psi+ with the induced order and parameters");
  transfer_cmd->add_option("--param", o.param, "parameter name")->required();
  add_target(transfer_cmd, o);
  transfer_cmd->add_option("--position", o.position, "insertion position when b0 = 2");
  handlers[transfer_cmd] = cmd_transfer;

  auto* jac = app.add_subcommand("jac", "Jacquet sequences");
  jac->add_flag("--normal-form", o.normal_form, "normal form of --x2");
  jac->add_flag("--nonvanishing", o.nonvanishing, "chain criterion for [from, to]");
  jac->add_option("--x2", o.x2, "doubled exponents")->expected(0, -1);
  jac->add_option("--param", o.param, "parameter name");
  jac->add_option("--rho", o.rho, "cuspidal label id");
  jac->add_option("--from-x2", o.from_x2, "segment start, doubled");
  jac->add_option("--to-x2", o.to_x2, "segment end, doubled");
  handlers[jac] = cmd_jac;

  auto* irr = app.add_subcommand("irreducible", "sufficient test for rho|.|^x x pi irreducible");
  irr->add_option("--param", o.param, "parameter name")->required();
  irr->add_option("--rho", o.rho, "cuspidal label id")->required();
  irr->add_option("--x-x2", o.x_x2, "exponent x, doubled")->required();
  handlers[irr] = cmd_irreducible;

  auto* infchar = app.add_subcommand("infchar", "infinitesimal character of a real parameter");
  infchar->add_option("--arch", o.arch, "arch entry name")->required();
  infchar->add_option("--a-tau", o.a_tau, "a_tau of each tau component")->expected(0, -1);
  add_s0(infchar, o);
  infchar->add_flag("--check-regular", o.check_regular, "exit 2 when not regular");
  handlers[infchar] = cmd_infchar;

  auto* arch_order = app.add_subcommand("arch-order", "Gamma-factor pole order at s0");
  arch_order->add_option("--arch", o.arch, "arch entry name")->required();
  arch_order->add_option("--a-tau", o.a_tau, "a_tau of each tau component")->required()->expected(1, -1);
  add_s0(arch_order, o);
  handlers[arch_order] = cmd_arch_order;

  auto* eis = app.add_subcommand("eisenstein", "pole and residue verdict for Eisenstein series");
  eis->add_option("--global", o.global, "global Jord name")->required();
  eis->add_option("--rho", o.rho, "cuspidal label id")->required();
  add_s0(eis, o);
  eis->add_option("--local", o.local, "per-place pi+ nonnullity: true, false or unknown")->expected(0, -1);
  eis->add_option("--regular", o.regular, "regular infinitesimal character: true, false or unknown");
  eis->add_option("--cohomological", o.cohomological, "cohomological: true, false or unknown");
  eis->add_option("--condition6", o.condition6, "square-integrability side condition");
  handlers[eis] = cmd_eisenstein;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "arthur-calc: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  json report = json::object();
  try {
    const int code = handlers.at(chosen)(o, report);
    out << report.dump() << "\n";
    return code;
  } catch (const UsageError& e) {
    err << "arthur-calc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    err << "arthur-calc: " << e.what() << "\n";
    out << json{{"error", e.what()}, {"pointer", e.pointer()}}.dump() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "arthur-calc: " << e.what() << "\n";
    out << json{{"error", e.what()}}.dump() << "\n";
    return kExitValidation;
  }
}

}  // namespace arthur::cli
