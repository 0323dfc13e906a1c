#pragma once

// JSON and text rendering of reports. Rationals are {"num": .., "den": ..};
// no floating point is ever emitted. Object keys are sorted, so dumping a
// parsed document reproduces it byte for byte.

#include <limits>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <variant>
#include <string>
#include <vector>

#include <json.hpp>

#include "horikawa/blowdown.hpp"
#include "horikawa/cover.hpp"
#include "horikawa/hj.hpp"
#include "horikawa/pipeline.hpp"

namespace horikawa {

using json = nlohmann::json;

inline json json_of_int(const big_integer& v) {
  if (v > std::numeric_limits<integer>::max() || v < std::numeric_limits<integer>::min())
    throw std::overflow_error("integer too large for JSON output");
  return static_cast<integer>(v);
}

inline json json_of(const rational& q) {
  return json{{"num", json_of_int(numerator(q))}, {"den", json_of_int(denominator(q))}};
}

inline json json_of(const Value& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, rational>) return json_of(x);
        else return json(x);
      },
      v);
}

inline json json_of(const SurfaceInvariants& s) {
  json j = json::object();
  if (s.p_g) j["p_g"] = *s.p_g;
  if (s.q) j["q"] = *s.q;
  if (s.chi) j["chi"] = *s.chi;
  if (s.K2) j["K2"] = *s.K2;
  if (s.e) j["e"] = *s.e;
  return j;
}

inline json json_of(const ChainClassification& c) {
  json j{{"chain", to_string(c.chain)}, {"kind", kind_name(c.kind)}};
  const auto qt = hj_value(c.chain);
  j["quotient"] = {{"m", qt.m}, {"q", qt.q}};
  if (c.is_rdp()) j["rdp_rank"] = std::get<RationalDoublePoint>(c.kind).r;
  if (c.is_class_t()) {
    const auto& t = c.t_data();
    j["t_data"] = {{"d", t.d}, {"n", t.n}, {"a", t.a}};
    j["seed"] = to_string(*c.seed);
    json trace = json::array();
    for (auto s : c.reduction_trace) trace.push_back(to_string(s));
    j["reduction_trace"] = trace;
  }
  return j;
}

inline json json_of(const SmoothedFiberInvariants& s) {
  json j = json_of(s.invariants);
  j["p_g_inferred"] = s.p_g_inferred;
  json chains = json::array();
  for (const auto& c : s.chains) {
    json d = json::array();
    for (const auto& x : c.discrepancies) d.push_back(json_of(x));
    chains.push_back({{"chain", to_string(c.chain)},
                      {"discrepancies", d},
                      {"k2_correction", json_of(c.k2_correction)},
                      {"euler_drop", c.euler_drop},
                      {"smoothing_dimension", c.smoothing_dimension}});
  }
  j["chains"] = chains;
  j["warnings"] = s.warnings;
  return j;
}

/// Top-level document: command, inputs, identities, flags, invariants, verdict.
inline json json_of(const EnReport& r, json extra_invariants = json::object()) {
  json j;
  j["command"] = r.command;
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = json_of(v);
  j["inputs"] = inputs;
  json ids = json::array();
  for (const auto& id : r.identities)
    ids.push_back({{"name", id.name},
                   {"expected", json_of(id.expected)},
                   {"computed", json_of(id.computed)},
                   {"pass", id.pass},
                   {"provenance", to_string(id.provenance)}});
  j["identities"] = ids;
  json flags = json::array();
  for (const auto& f : r.flags) flags.push_back({{"name", f.name}, {"detail", f.detail}});
  j["flags"] = flags;

  json inv = std::move(extra_invariants);
  if (!inv.is_object()) inv = json::object();
  if (r.chain) inv["chain"] = json_of(*r.chain);
  if (r.reversed_chain) inv["reversed_chain"] = json_of(*r.reversed_chain);
  if (r.resolution) inv["resolution"] = json_of(*r.resolution);
  if (r.smoothed) inv["smoothed"] = json_of(*r.smoothed);
  if (r.direct) inv["direct"] = json_of(*r.direct);
  if (!r.quantities.empty()) {
    json q = json::object();
    for (const auto& [k, v] : r.quantities) q[k] = json_of(v);
    inv["quantities"] = q;
  }
  j["invariants"] = inv;
  j["verdict"] = r.verdict() ? "pass" : "fail";
  return j;
}

namespace detail {

inline bool is_rational(const json& j) { return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den"); }

inline std::string render_value(const json& j) {
  if (is_rational(j)) {
    const auto den = j["den"].get<integer>();
    return den == 1 ? std::to_string(j["num"].get<integer>())
                    : std::to_string(j["num"].get<integer>()) + "/" + std::to_string(den);
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + render_value(j[i]);
    return s + "]";
  }
  return j.dump();
}

inline void render_tree(std::ostream& out, const std::string& prefix, const json& j) {
  if (j.is_object() && !is_rational(j) && !j.empty()) {
    for (const auto& [k, v] : j.items()) render_tree(out, prefix.empty() ? k : prefix + "." + k, v);
    return;
  }
  out << prefix << ": " << render_value(j) << '\n';
}

}  // namespace detail

/// Plain-text rendering of the same document.
inline std::string to_text(const json& doc) {
  std::ostringstream out;
  out << "command: " << doc["command"].get<std::string>() << '\n';
  detail::render_tree(out, "inputs", doc["inputs"]);
  for (const auto& id : doc["identities"]) {
    out << (id["pass"].get<bool>() ? "[pass] " : "[FAIL] ") << id["name"].get<std::string>()
        << ": expected " << detail::render_value(id["expected"]) << ", computed "
        << detail::render_value(id["computed"]) << " (" << id["provenance"].get<std::string>() << ")\n";
  }
  for (const auto& f : doc["flags"])
    out << "flag " << f["name"].get<std::string>() << ": " << f["detail"].get<std::string>() << '\n';
  detail::render_tree(out, "invariants", doc["invariants"]);
  out << "verdict: " << doc["verdict"].get<std::string>() << '\n';
  return out.str();
}

}  // namespace horikawa
