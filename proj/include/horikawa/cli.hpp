#pragma once

// Command-line front end. `run` is the whole program; tools/horikawa.cpp only
// forwards argv to it.
//
// Exit codes: 0 all published identities hold, 1 some identity failed (the
// report is still written), 2 invalid input.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "horikawa/blowdown.hpp"
#include "horikawa/cover.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/hj.hpp"
#include "horikawa/pipeline.hpp"
#include "horikawa/report_json.hpp"

namespace horikawa::cli {

inline ResolutionChain parse_chain(const std::string& text) {
  std::vector<integer> b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    integer v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw precondition_error("bad chain entry '" + item + "'");
    }
    if (used != item.size()) throw precondition_error("bad chain entry '" + item + "'");
    b.push_back(v);
  }
  return ResolutionChain(std::move(b));
}

namespace detail {

inline EnReport hj_report(std::optional<integer> m, std::optional<integer> q, const std::string& chain, json& inv) {
  EnReport r;
  r.command = "hj";
  if (!chain.empty()) {
    if (m || q) throw precondition_error("give either --chain or --m/--q");
    const auto c = parse_chain(chain);
    r.inputs.emplace_back("chain", to_string(c));
    const auto x = hj_value(c);
    r.check("round_trip", to_string(c), to_string(hj_expand(x)), Provenance::Trivial);
    inv["chain"] = to_string(c);
    inv["quotient"] = {{"m", x.m}, {"q", x.q}};
  } else {
    if (!m || !q) throw precondition_error("hj needs --m and --q, or --chain");
    const CyclicQuotient x(*m, *q);
    r.inputs.emplace_back("m", x.m);
    r.inputs.emplace_back("q", x.q);
    const auto c = hj_expand(x);
    const auto back = hj_value(c);
    r.check("round_trip", std::vector<integer>{x.m, x.q}, std::vector<integer>{back.m, back.q}, Provenance::Trivial);
    inv["chain"] = to_string(c);
    inv["quotient"] = {{"m", x.m}, {"q", x.q}};
  }
  return r;
}

inline EnReport recognize_report(const std::string& chain) {
  EnReport r;
  r.command = "class-t recognize";
  const auto c = parse_chain(chain);
  r.inputs.emplace_back("chain", to_string(c));
  r.chain = recognize_class_t(c);
  r.reversed_chain = recognize_class_t(c.reversed());
  r.check("orientation_agrees", kind_name(r.chain->kind), kind_name(r.reversed_chain->kind), Provenance::Derived);
  if (r.chain->is_class_t()) {
    const auto& t = r.chain->t_data();
    const auto x = hj_value(c);
    r.check("quotient_matches_t_data", std::vector<integer>{t.d * t.n * t.n, t.d * t.n * t.a - 1},
            std::vector<integer>{x.m, x.q}, Provenance::Derived);
    ResolutionChain replay = *r.chain->seed;
    for (auto it = r.chain->reduction_trace.rbegin(); it != r.chain->reduction_trace.rend(); ++it)
      replay = unreduce(replay, *it);
    r.check("trace_replays", to_string(c), to_string(replay), Provenance::Derived);
  }
  return r;
}

inline EnReport generate_report(integer max_length, json& inv) {
  if (max_length < 1) throw precondition_error("--max-length must be at least 1");
  EnReport r;
  r.command = "class-t generate";
  r.inputs.emplace_back("max_length", max_length);
  const auto chains = generate_class_t(static_cast<std::size_t>(max_length));
  json list = json::array();
  bool all_t = true;
  for (const auto& c : chains) {
    list.push_back(to_string(c));
    all_t = all_t && recognize_class_t(c).is_class_t();
  }
  r.check("all_recognized", true, all_t, Provenance::Derived);
  inv["chains"] = list;
  inv["count"] = chains.size();
  return r;
}

inline EnReport expand_report(const std::string& chain, json& inv) {
  EnReport r;
  r.command = "class-t expand";
  const auto c = parse_chain(chain);
  r.inputs.emplace_back("chain", to_string(c));
  const auto [left, right] = expand_t_chain(c);
  inv["left"] = to_string(left);
  inv["right"] = to_string(right);
  const auto cls = recognize_class_t(c);
  if (cls.is_class_t()) {
    const auto d = cls.t_data().d;
    const auto l = recognize_class_t(left);
    const auto rr = recognize_class_t(right);
    r.check("left.d", d, l.is_class_t() ? l.t_data().d : integer{-1}, Provenance::Derived);
    r.check("right.d", d, rr.is_class_t() ? rr.t_data().d : integer{-1}, Provenance::Derived);
  }
  return r;
}

inline EnReport horikawa_report(integer n) {
  EnReport r;
  r.command = "horikawa";
  r.inputs.emplace_back("n", n);
  r.direct = horikawa_direct(n);
  r.check("chi_K2_e", std::vector<integer>{n, 2 * n - 6, 10 * n + 6}, chi_k2_e(*r.direct), Provenance::Derived);
  r.check("pg_q", std::vector<integer>{n - 1, 0},
          std::vector<integer>{r.direct->p_g.value_or(-1), r.direct->q.value_or(-1)}, Provenance::Derived);
  r.check("noether_margin", integer{0}, noether_check(*r.direct).margin, Provenance::Derived);
  return r;
}

inline EnReport blowdown_report(const SurfaceInvariants& v, const std::vector<std::string>& chains) {
  EnReport r;
  r.command = "blowdown";
  if (v.p_g) r.inputs.emplace_back("p_g", *v.p_g);
  r.inputs.emplace_back("chi", *v.chi);
  r.inputs.emplace_back("K2", *v.K2);
  r.inputs.emplace_back("e", *v.e);
  std::vector<ChainClassification> cls;
  std::string joined;
  for (const auto& s : chains) {
    auto c = recognize_class_t(parse_chain(s));
    if (!c.is_class_t() && !c.is_rdp()) throw precondition_error("chain " + to_string(c.chain) + " is not of class T");
    joined += (joined.empty() ? "" : ";") + to_string(c.chain);
    cls.push_back(std::move(c));
  }
  r.inputs.emplace_back("chains", joined);
  if (!v.noether_formula_holds()) throw precondition_error("input invariants violate 12 chi = K^2 + e");
  r.resolution = v;
  r.smoothed = smoothing_invariants(v, cls);
  r.check("noether_formula", true, r.smoothed->invariants.noether_formula_holds(), Provenance::Derived);
  if (r.smoothed->invariants.p_g) {
    const auto nc = noether_check(r.smoothed->invariants);
    r.report("noether_margin", nc.margin);
    if (!nc.satisfied) r.flag("noether_violated", "smoothed fibre violates the Noether inequality");
  }
  if (r.smoothed->p_g_inferred) r.flag("p_g_inferred", "p_g of the smoothed fibre is carried over, not derived");
  for (const auto& w : r.smoothed->warnings) r.flag("smoothing_warning", w);
  return r;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariant calculator for Horikawa surfaces via Q-Gorenstein smoothings", "horikawa"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::optional<integer> m, q;
  std::string chain;
  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung expansion of 1/m(1,q), or the quotient of a chain");
  hj->add_option("--m", m, "order m");
  hj->add_option("--q", q, "weight q");
  hj->add_option("--chain", chain, "comma-separated chain, e.g. 5,2");
  hj->add_flag("--json", as_json);

  auto* ct = app.add_subcommand("class-t", "class-T chain calculus");
  ct->require_subcommand(1);
  auto* rec = ct->add_subcommand("recognize", "classify a chain");
  rec->add_option("--chain", chain)->required();
  rec->add_flag("--json", as_json);
  integer max_length = 0;
  auto* gen = ct->add_subcommand("generate", "list all class-T chains up to a length");
  gen->add_option("--max-length", max_length)->required();
  gen->add_flag("--json", as_json);
  auto* exp = ct->add_subcommand("expand", "apply both expansion rules");
  exp->add_option("--chain", chain)->required();
  exp->add_flag("--json", as_json);

  integer n = 0;
  auto* en = app.add_subcommand("en-report", "verify the E(n) configuration and its blowdown");
  en->add_option("--n", n)->required();
  en->add_flag("--json", as_json);
  auto* hor = app.add_subcommand("horikawa", "invariants of H(n) as a double cover");
  hor->add_option("--n", n)->required();
  hor->add_flag("--json", as_json);
  auto* sc = app.add_subcommand("single-contraction", "contract one chain of E(n)");
  sc->add_option("--n", n)->required();
  sc->add_flag("--json", as_json);
  integer count = 0;
  auto* w4 = app.add_subcommand("w4", "contract (-4)-sections of E(4)");
  w4->add_option("--count", count)->required();
  w4->add_flag("--json", as_json);

  SurfaceInvariants v;
  integer chi = 0, k2 = 0, e = 0;
  std::optional<integer> pg;
  std::vector<std::string> chains;
  auto* bd = app.add_subcommand("blowdown", "contract class-T chains and smooth");
  bd->add_option("--chi", chi)->required();
  bd->add_option("--k2", k2)->required();
  bd->add_option("--e", e)->required();
  bd->add_option("--pg", pg);
  bd->add_option("--chain", chains)->required();
  bd->add_flag("--json", as_json);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(argv_rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n\n" << app.help();
    return 2;
  }

  EnReport report;
  json extra = json::object();
  try {
    if (hj->parsed()) report = detail::hj_report(m, q, chain, extra);
    else if (rec->parsed()) report = detail::recognize_report(chain);
    else if (gen->parsed()) report = detail::generate_report(max_length, extra);
    else if (exp->parsed()) report = detail::expand_report(chain, extra);
    else if (en->parsed()) report = en_report(n);
    else if (hor->parsed()) report = detail::horikawa_report(n);
    else if (sc->parsed()) report = single_contraction_report(n);
    else if (w4->parsed()) report = w4_example(count);
    else {
      v = SurfaceInvariants{pg, std::nullopt, chi, k2, e};
      report = detail::blowdown_report(v, chains);
    }
  } catch (const precondition_error& ex) {
    err << "invalid input: " << ex.what() << '\n';
    return 2;
  } catch (const accounting_error& ex) {
    err << "accounting error: " << ex.what() << '\n';
    return 1;
  }

  const json doc = json_of(report, extra);
  if (as_json) out << doc.dump(2) << '\n';
  else out << to_text(doc);
  return report.verdict() ? 0 : 1;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace horikawa::cli
