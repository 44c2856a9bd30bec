#pragma once

// JSON encodings of the library types. Rationals travel as "p/q" strings so
// exact inputs are never routed through floating point.

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "partent/algebra.hpp"
#include "partent/decomposition.hpp"
#include "partent/entropy.hpp"
#include "partent/error.hpp"
#include "partent/mset.hpp"
#include "partent/rational.hpp"
#include "partent/step_measure.hpp"
#include "partent/transport.hpp"

namespace partent::json_io {

using json = nlohmann::json;

[[noreturn]] inline void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

inline const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) malformed(std::string("field '") + key + "' must be an array");
  return a;
}

inline Rat rat_from_json(const json& j) {
  if (!j.is_string()) malformed("rationals are encoded as \"p/q\" strings");
  return Rat::parse(j.get<std::string>());
}

inline json to_json(const Rat& r) { return r.str(); }

inline MSet mset_from_json(const json& j) {
  std::vector<Interval> raw;
  for (const auto& pair : array_field(j, "intervals")) {
    if (!pair.is_array() || pair.size() != 2) malformed("each interval is a [lo, hi] pair");
    raw.push_back({rat_from_json(pair[0]), rat_from_json(pair[1])});
  }
  return MSet::normalize(std::move(raw));
}

inline json to_json(const MSet& s) {
  json iv = json::array();
  for (const auto& i : s.intervals()) iv.push_back({i.lo.str(), i.hi.str()});
  return {{"intervals", std::move(iv)}};
}

inline SignedMeasure measure_from_json(const json& j) {
  std::vector<Rat> bp, dens;
  for (const auto& x : array_field(j, "breakpoints")) bp.push_back(rat_from_json(x));
  for (const auto& x : array_field(j, "densities")) dens.push_back(rat_from_json(x));
  return SignedMeasure(std::move(bp), std::move(dens));
}

inline json to_json(const SignedMeasure& m) {
  json bp = json::array(), dens = json::array();
  for (const auto& x : m.breakpoints()) bp.push_back(x.str());
  for (const auto& x : m.densities()) dens.push_back(x.str());
  return {{"breakpoints", std::move(bp)}, {"densities", std::move(dens)}};
}

inline Algebra algebra_from_json(const json& j) {
  std::vector<MSet> atoms;
  for (const auto& a : array_field(j, "atoms")) atoms.push_back(mset_from_json(a));
  return Algebra::from_atoms(std::move(atoms));
}

inline json to_json(const Algebra& a) {
  json atoms = json::array();
  for (const auto& s : a.atoms()) atoms.push_back(to_json(s));
  return {{"atoms", std::move(atoms)}};
}

inline AtomProfile profile_from_json(const json& j) {
  std::vector<Rat> w;
  for (const auto& x : array_field(j, "weights")) w.push_back(rat_from_json(x));
  return AtomProfile(std::move(w));
}

inline EntropySpec spec_from_json(const json& j, int depth = 0) {
  if (depth > 32) malformed("entropy spec nested too deeply");
  const json& kind_j = field(j, "kind");
  if (!kind_j.is_string()) malformed("'kind' must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "shannon") return Shannon{};
  if (kind == "hartley") return Hartley{};
  if (kind == "min") return MinInfo{};
  if (kind == "max") return MaxInfo{};
  if (kind == "variance") return Variance{};
  if (kind == "renyi") return Renyi(rat_from_json(field(j, "alpha")));
  if (kind == "lm") return Lm{measure_from_json(field(j, "measure"))};
  if (kind == "combo") {
    std::vector<std::pair<Rat, EntropySpec>> terms;
    for (const auto& t : array_field(j, "terms"))
      terms.emplace_back(rat_from_json(field(t, "weight")), spec_from_json(field(t, "spec"), depth + 1));
    return combo(std::move(terms));
  }
  malformed("unknown entropy kind '" + kind + "'");
}

inline json to_json(const EntropySpec& spec) {
  return std::visit(
      [](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Shannon>) return {{"kind", "shannon"}};
        else if constexpr (std::is_same_v<K, Hartley>) return {{"kind", "hartley"}};
        else if constexpr (std::is_same_v<K, MinInfo>) return {{"kind", "min"}};
        else if constexpr (std::is_same_v<K, MaxInfo>) return {{"kind", "max"}};
        else if constexpr (std::is_same_v<K, Variance>) return {{"kind", "variance"}};
        else if constexpr (std::is_same_v<K, Renyi>) return {{"kind", "renyi"}, {"alpha", k.alpha().str()}};
        else if constexpr (std::is_same_v<K, Lm>) return {{"kind", "lm"}, {"measure", to_json(k.m)}};
        else {
          json terms = json::array();
          for (const auto& t : k.terms) terms.push_back({{"weight", t->weight.str()}, {"spec", to_json(t->spec)}});
          return {{"kind", "combo"}, {"terms", std::move(terms)}};
        }
      },
      spec.kind());
}

inline json to_json(const DeltaResult& r) {
  return {{"value", r.value},
          {"lambda", r.lambda_used.str()},
          {"pieces", r.pieces},
          {"crosscheck_residual", r.crosscheck_residual}};
}

inline json to_json(const GridMeasure& g) { return {{"n", g.n}, {"cells", g.cells}}; }

inline json to_json(const DecompositionReport& r) {
  return {{"grid", to_json(r.grid)},
          {"atom_dependence_deviation", r.atom_dependence_deviation},
          {"additivity_deviation", r.additivity_deviation},
          {"trials", r.trials}};
}

namespace detail {

inline std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

inline void dump(const json& j, std::string& out, int indent, int level) {
  const auto newline = [&](int lvl) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * lvl), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(level + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump(it.value(), out, indent, level + 1);
      }
      newline(level);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        newline(level + 1);
        dump(j[i], out, indent, level + 1);
      }
      newline(level);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Serializes with floats at 17 significant digits, so output is exact and stable.
inline std::string dump(const json& j, int indent = 2) {
  std::string out;
  detail::dump(j, out, indent, 0);
  return out;
}

}  // namespace partent::json_io
