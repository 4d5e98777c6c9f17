#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgram/core.hpp"
#include "lgram/tree.hpp"

namespace lgram {

/// A deterministic context-free Lindenmayer grammar: one rewrite rule per
/// symbol, no terminal/nonterminal distinction. Rewriting is parallel: every
/// symbol of a generation is replaced simultaneously.
class Grammar {
 public:
  Grammar(std::map<Symbol, Word> rules, Word axiom, std::string name = "")
      : rules_(std::move(rules)), axiom_(std::move(axiom)), name_(std::move(name)) {
    if (axiom_.empty()) throw error("axiom is empty");
    for (const auto& [lhs, rhs] : rules_) {
      alphabet_.insert(lhs);
      for (const Symbol& s : rhs) alphabet_.insert(s);
    }
    for (const Symbol& s : axiom_) alphabet_.insert(s);
    for (const Symbol& s : alphabet_)
      if (!rules_.count(s)) throw error("symbol \"" + s.id() + "\" has no rule");
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::map<Symbol, Word>& rules() const { return rules_; }
  const Word& axiom() const { return axiom_; }
  const std::string& name() const { return name_; }

  const Word& rule_for(const Symbol& s) const {
    auto it = rules_.find(s);
    if (it == rules_.end()) throw error("symbol \"" + s.id() + "\" has no rule");
    return it->second;
  }

  friend bool operator==(const Grammar& a, const Grammar& b) {
    return a.rules_ == b.rules_ && a.axiom_ == b.axiom_;
  }

 private:
  std::map<Symbol, Word> rules_;
  Word axiom_;
  std::string name_;
  Alphabet alphabet_;
};

struct Derivation {
  Grammar grammar;
  std::vector<Word> generations;  // generations[0] is the axiom
};

/// One parallel rewrite: the concatenation of rules[s] for each symbol s of
/// `generation`, in order.
inline Word step(const Grammar& grammar, const Word& generation) {
  Word out;
  for (std::size_t i = 0; i < generation.size(); ++i) {
    auto it = grammar.rules().find(generation[i]);
    if (it == grammar.rules().end())
      throw error("symbol \"" + generation[i].id() + "\" at position " + std::to_string(i) +
                  " has no rule");
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

inline Derivation derive(const Grammar& grammar, std::size_t n) {
  Derivation d{grammar, {grammar.axiom()}};
  d.generations.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) d.generations.push_back(step(grammar, d.generations.back()));
  return d;
}

struct GenerationStats {
  std::size_t length = 0;
  std::map<Symbol, std::size_t> counts;  // one entry per alphabet symbol, zeros included

  friend bool operator==(const GenerationStats&, const GenerationStats&) = default;
};

inline std::vector<GenerationStats> generation_stats(const Derivation& d) {
  std::vector<GenerationStats> out;
  out.reserve(d.generations.size());
  for (const Word& g : d.generations) {
    GenerationStats st;
    st.length = g.size();
    for (const Symbol& s : d.grammar.alphabet()) st.counts[s] = 0;
    for (const Symbol& s : g) ++st.counts[s];
    out.push_back(std::move(st));
  }
  return out;
}

/// The full rewrite history of a single-symbol axiom as a tree: each node at
/// depth g is a symbol of generation g, and its children spell the rule
/// applied to it. Leaves sit at the final generation.
class DerivationTree {
 public:
  DerivationTree(Grammar grammar, Tree tree) : grammar_(std::move(grammar)), tree_(std::move(tree)) {
    generation_.resize(tree_.size());
    for (Tree::NodeId id : walk(tree_))
      generation_[id] = tree_.parent(id) ? generation_[*tree_.parent(id)] + 1 : 0;
  }

  const Grammar& grammar() const { return grammar_; }
  const Tree& tree() const { return tree_; }

  std::size_t generation_of(Tree::NodeId id) const {
    if (id >= generation_.size()) throw error("no such tree node: " + std::to_string(id));
    return generation_[id];
  }

  /// Node ids at generation g, left to right; their labels spell that
  /// generation of the derivation.
  std::vector<Tree::NodeId> generation_nodes(std::size_t g) const {
    std::vector<Tree::NodeId> out;
    for (Tree::NodeId id : walk(tree_))
      if (generation_[id] == g) out.push_back(id);
    return out;
  }

  std::size_t depth() const { return tree_.depth(); }

 private:
  Grammar grammar_;
  Tree tree_;
  std::vector<std::size_t> generation_;
};

inline DerivationTree derivation_tree(const Grammar& grammar, std::size_t n) {
  if (grammar.axiom().size() != 1)
    throw error("derivation tree requires a single-symbol axiom, got length " +
                std::to_string(grammar.axiom().size()));
  auto build = [&](auto&& self, const Symbol& s, std::size_t remaining) -> Tree {
    if (remaining == 0) return Tree::leaf(s);
    std::vector<Tree> children;
    for (const Symbol& c : grammar.rule_for(s)) children.push_back(self(self, c, remaining - 1));
    return Tree::node(s, children);
  };
  return DerivationTree(grammar, build(build, grammar.axiom()[0], n));
}

/// Grammar file format: one directive per line. `axiom: <tokens>` (exactly
/// once) and `rule: <token> -> <tokens>`; tokens are separated by spaces,
/// `#` starts a comment, blank lines are ignored.
inline Grammar parse_grammar(std::string_view text, std::string name = "") {
  std::map<Symbol, Word> rules;
  std::optional<Word> axiom;
  std::size_t line_no = 0;
  std::size_t start = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw parse_error("line " + std::to_string(line_no) + ": " + msg);
  };
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line{text.substr(start, end - start)};
    const bool last = end == text.size();
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      if (last) break;
      continue;
    }
    const auto stop = line.find_last_not_of(" \t\r");
    line = line.substr(first, stop - first + 1);
    if (line.rfind("axiom:", 0) == 0) {
      if (axiom) fail("duplicate axiom directive");
      Word w;
      try {
        w = parse_word(line.substr(6));
      } catch (const error& e) {
        fail(e.what());
      }
      if (w.empty()) fail("axiom is empty");
      axiom = std::move(w);
    } else if (line.rfind("rule:", 0) == 0) {
      std::string body = line.substr(5);
      const auto arrow = body.find("->");
      if (arrow == std::string::npos) fail("rule has no \"->\"");
      Word lhs;
      try {
        lhs = parse_word(body.substr(0, arrow));
      } catch (const error& e) {
        fail(e.what());
      }
      if (lhs.size() != 1) fail("rule left-hand side must be a single symbol");
      Word rhs;
      try {
        rhs = parse_word(body.substr(arrow + 2));
      } catch (const error& e) {
        fail(e.what());
      }
      if (!rules.emplace(lhs[0], std::move(rhs)).second)
        fail("duplicate rule for symbol \"" + lhs[0].id() + "\"");
    } else {
      fail("expected an axiom: or rule: directive");
    }
    if (last) break;
  }
  if (!axiom) throw parse_error("missing axiom directive");
  try {
    return Grammar(std::move(rules), std::move(*axiom), std::move(name));
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

inline std::string format_grammar(const Grammar& g) {
  std::string out = "axiom: " + format_word_spaced(g.axiom()) + "\n";
  for (const auto& [lhs, rhs] : g.rules())
    out += "rule: " + lhs.id() + " -> " + format_word_spaced(rhs) + "\n";
  return out;
}

/// Rules 0 -> 1, 1 -> 0 1 from axiom 0. Generation lengths follow the
/// Fibonacci numbers.
inline Grammar fib_grammar() {
  Symbol zero{"0"}, one{"1"};
  return Grammar({{zero, {one}}, {one, {zero, one}}}, {zero}, "fib");
}

/// Rules 0 -> 1, 1 -> 1 0 from axiom 0: the mirror-image expansion of fib.
inline Grammar bif_grammar() {
  Symbol zero{"0"}, one{"1"};
  return Grammar({{zero, {one}}, {one, {one, zero}}}, {zero}, "bif");
}

/// Rules a -> a b, b -> b a from axiom a (the Thue-Morse pattern over a/b).
inline Grammar xor_ab_grammar() {
  Symbol a{"a"}, b{"b"};
  return Grammar({{a, {a, b}}, {b, {b, a}}}, {a}, "xor-ab");
}

/// Rules 0 -> 1 0, 1 -> 0 1 from axiom 0: a symmetric system with no
/// loop-free symbol. Its generations break the first law by generation 3.
inline Grammar xor_01_grammar() {
  Symbol zero{"0"}, one{"1"};
  return Grammar({{zero, {one, zero}}, {one, {zero, one}}}, {zero}, "xor-01");
}

inline std::optional<Grammar> builtin_grammar(std::string_view name) {
  if (name == "fib") return fib_grammar();
  if (name == "bif") return bif_grammar();
  if (name == "xor-ab") return xor_ab_grammar();
  if (name == "xor-01") return xor_01_grammar();
  return std::nullopt;
}

}  // namespace lgram
