#pragma once

#include <cstddef>

#include "json.hpp"
#include "lgram/ca.hpp"
#include "lgram/core.hpp"
#include "lgram/lsystem.hpp"
#include "lgram/model_check.hpp"
#include "lgram/sac.hpp"
#include "lgram/tree.hpp"
#include "lgram/tree_model.hpp"

// JSON views of the library's value types: snake-case keys, flat records,
// words rendered with the same compact/spaced convention as text output.

namespace lgram {

inline nlohmann::json json_of(const Symbol& s) { return s.id(); }

inline nlohmann::json json_of(const Word& w) { return format_word(w); }

inline nlohmann::json json_of(const Violation& v) {
  nlohmann::json j{{"position", v.position}, {"gram", format_word(v.gram)}};
  j["law"] = v.law.empty() ? nlohmann::json() : nlohmann::json(v.law);
  return j;
}

inline nlohmann::json json_of(const Verdict& v) {
  nlohmann::json vio = nlohmann::json::array();
  for (const Violation& x : v.violations) vio.push_back(json_of(x));
  return {{"ok", v.ok}, {"violations", vio}};
}

inline nlohmann::json json_of(const Derivation& d) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Word& g : d.generations) gens.push_back(format_word(g));
  return {{"grammar", d.grammar.name()}, {"generations", gens}};
}

inline nlohmann::json json_of(const GenerationStats& st) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [sym, n] : st.counts) counts[sym.id()] = n;
  return {{"length", st.length}, {"counts", counts}};
}

inline nlohmann::json json_of(const Tree& t, Tree::NodeId id) {
  nlohmann::json children = nlohmann::json::array();
  for (Tree::NodeId c : t.children(id)) children.push_back(json_of(t, c));
  return {{"label", t.label(id).id()}, {"children", children}};
}

inline nlohmann::json json_of(const Tree& t) { return json_of(t, t.root()); }

inline nlohmann::json json_of(const NacFailure& f) {
  return {{"node", f.node}, {"reason", to_string(f.reason)}};
}

inline nlohmann::json json_of(const NacVerdict& v) {
  nlohmann::json fails = nlohmann::json::array();
  for (const NacFailure& f : v.failures) fails.push_back(json_of(f));
  return {{"ok", v.ok}, {"failures", fails}};
}

inline nlohmann::json json_of(const ElementaryTree& et) {
  return {{"tree", json_of(et.tree)}, {"constituent", et.constituent}};
}

inline nlohmann::json json_of(const ModelReport& r) {
  nlohmann::json j{{"grammar", r.grammar}, {"bound", r.bound}, {"ok", r.ok}};
  if (r.first_failure && !r.first_failure->verdict.violations.empty()) {
    const Violation& v = r.first_failure->verdict.violations.front();
    j["failure"] = {{"generation", r.first_failure->generation},
                    {"position", v.position},
                    {"gram", format_word(v.gram)}};
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

inline nlohmann::json json_of(const GrammarClass& c) {
  nlohmann::json j{{"kind", to_string(c.kind)}};
  j["lonely_beta"] = c.lonely_beta ? nlohmann::json(c.lonely_beta->id()) : nlohmann::json();
  return j;
}

inline nlohmann::json json_of(const SameModelResult& r) {
  return {{"same", r.same}, {"first", json_of(r.first)}, {"second", json_of(r.second)}};
}

inline nlohmann::json json_of(const History& h) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Word& r : h.rows) rows.push_back(format_word(r));
  return {{"rows", rows}, {"boundary", "periodic"}};
}

inline nlohmann::json json_of(const GridViolation& v) {
  nlohmann::json j{{"row", v.row}, {"column", v.column}, {"gram", format_word(v.gram)}};
  j["law"] = v.law.empty() ? nlohmann::json() : nlohmann::json(v.law);
  return j;
}

inline nlohmann::json json_of(const AxisVerdict& v) {
  nlohmann::json vio = nlohmann::json::array();
  for (const GridViolation& x : v.violations) vio.push_back(json_of(x));
  return {{"ok", v.ok}, {"violations", vio}};
}

inline nlohmann::json json_of(const WindowTrees& wt) {
  nlohmann::json trees = nlohmann::json::array();
  for (const Tree& t : wt.trees) trees.push_back(json_of(t));
  return {{"length", wt.length},
          {"start", wt.start},
          {"gram", format_word(wt.gram)},
          {"trees", trees}};
}

}  // namespace lgram
