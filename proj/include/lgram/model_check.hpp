#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgram/core.hpp"
#include "lgram/lsystem.hpp"
#include "lgram/sac.hpp"
#include "lgram/tree.hpp"

namespace lgram {

enum class GrammarKind { asymmetric, symmetric };

inline std::string to_string(GrammarKind k) {
  return k == GrammarKind::asymmetric ? "asymmetric" : "symmetric";
}

struct GrammarClass {
  GrammarKind kind = GrammarKind::symmetric;
  std::optional<Symbol> lonely_beta;  // present iff kind is asymmetric

  friend bool operator==(const GrammarClass&, const GrammarClass&) = default;
};

/// The unique symbol whose rule does not mention itself, if there is exactly
/// one. Such a symbol can never immediately dominate its own label in a
/// derivation tree.
inline std::optional<Symbol> detect_lonely_beta(const Grammar& grammar) {
  std::optional<Symbol> found;
  for (const auto& [lhs, rhs] : grammar.rules()) {
    bool self = false;
    for (const Symbol& s : rhs)
      if (s == lhs) {
        self = true;
        break;
      }
    if (self) continue;
    if (found) return std::nullopt;  // not unique
    found = lhs;
  }
  return found;
}

inline GrammarClass classify_grammar(const Grammar& grammar) {
  GrammarClass c;
  c.lonely_beta = detect_lonely_beta(grammar);
  c.kind = c.lonely_beta ? GrammarKind::asymmetric : GrammarKind::symmetric;
  return c;
}

struct FailedGeneration {
  std::size_t generation = 0;
  Verdict verdict;

  friend bool operator==(const FailedGeneration&, const FailedGeneration&) = default;
};

/// Outcome of bounded model checking: a certificate that every generation up
/// to the bound passes the laws, or the first generation that does not. A
/// passing report says nothing about generations beyond the bound.
struct ModelReport {
  std::string grammar;
  std::size_t bound = 0;
  bool ok = true;
  std::optional<FailedGeneration> first_failure;

  std::size_t generations_checked() const {
    return first_failure ? first_failure->generation + 1 : bound + 1;
  }

  friend bool operator==(const ModelReport&, const ModelReport&) = default;
};

/// Derives generations 0..max_gen and checks each against the laws, stopping
/// at the first failure.
inline ModelReport grammar_satisfies(const Grammar& grammar, const NGramLawSet& laws,
                                     std::size_t max_gen) {
  for (const Symbol& s : grammar.alphabet())
    if (!laws.alphabet().count(s))
      throw error("grammar symbol \"" + s.id() +
                  "\" is not in the law alphabet; apply a symbol map first");
  ModelReport report;
  report.grammar = grammar.name();
  report.bound = max_gen;
  Word gen = grammar.axiom();
  for (std::size_t g = 0; g <= max_gen; ++g) {
    Verdict v = check_string(laws, gen);
    if (!v.ok) {
      report.ok = false;
      report.first_failure = FailedGeneration{g, std::move(v)};
      return report;
    }
    if (g < max_gen) gen = step(grammar, gen);
  }
  return report;
}

/// Rewrites a grammar through a symbol renaming. Symbols absent from the map
/// keep their names; two symbols may not collapse into one.
inline Grammar apply_symbol_map(const Grammar& grammar, const std::map<Symbol, Symbol>& map) {
  auto rename = [&](const Symbol& s) {
    auto it = map.find(s);
    return it == map.end() ? s : it->second;
  };
  std::map<Symbol, Word> rules;
  for (const auto& [lhs, rhs] : grammar.rules()) {
    Word new_rhs;
    for (const Symbol& s : rhs) new_rhs.push_back(rename(s));
    if (!rules.emplace(rename(lhs), std::move(new_rhs)).second)
      throw error("symbol map collapses two symbols into \"" + rename(lhs).id() + "\"");
  }
  Word axiom;
  for (const Symbol& s : grammar.axiom()) axiom.push_back(rename(s));
  return Grammar(std::move(rules), std::move(axiom), grammar.name());
}

struct SameModelResult {
  bool same = false;
  ModelReport first;
  ModelReport second;
};

/// Two grammars satisfy the same model when both pass the laws up to the
/// bound. This compares conformance, not the generated languages.
inline SameModelResult same_model(const Grammar& g1, const Grammar& g2, const NGramLawSet& laws,
                                  std::size_t max_gen) {
  SameModelResult r;
  r.first = grammar_satisfies(g1, laws, max_gen);
  r.second = grammar_satisfies(g2, laws, max_gen);
  r.same = r.first.ok && r.second.ok;
  return r;
}

enum class PointClass { k, n, s, other };

inline std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::k: return "k";
    case PointClass::n: return "n";
    case PointClass::s: return "s";
    case PointClass::other: return "other";
  }
  throw error("unknown point class");
}

/// Classifies every node of a binary derivation tree. A node is a k point
/// when it is a 1 under a 0 whose children spell the grammar's rule for 1;
/// a 1 directly under a k point is an n point; a 1 directly under an n
/// point is an s point; everything else is unclassified.
inline std::map<Tree::NodeId, PointClass> classify_points(const DerivationTree& dt) {
  const Symbol zero{"0"}, one{"1"};
  if (dt.grammar().alphabet() != Alphabet{zero, one})
    throw error("point classification requires the binary alphabet {0, 1}");
  const Word& one_rhs = dt.grammar().rule_for(one);
  const Tree& t = dt.tree();
  std::map<Tree::NodeId, PointClass> out;
  for (Tree::NodeId id : walk(t)) {
    PointClass cls = PointClass::other;
    if (t.label(id) == one) {
      auto mother = t.parent(id);
      if (mother && t.label(*mother) == zero) {
        Word kids;
        for (Tree::NodeId c : t.children(id)) kids.push_back(t.label(c));
        if (kids == one_rhs) cls = PointClass::k;
      } else if (mother && out.at(*mother) == PointClass::k) {
        cls = PointClass::n;
      } else if (mother && out.at(*mother) == PointClass::n) {
        cls = PointClass::s;
      }
    }
    out.emplace(id, cls);
  }
  return out;
}

}  // namespace lgram
