#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lgram/core.hpp"
#include "lgram/sac.hpp"
#include "lgram/tree.hpp"

namespace lgram {

/// A tree admissibility model: string laws applied to child sequences, an
/// optional loop-free symbol (a label that may never immediately dominate
/// itself and dominates at most one child), and a breadth cap for trees
/// offered as elementary building blocks.
class TreeModel {
 public:
  TreeModel(NGramLawSet laws, std::optional<Symbol> lonely_beta,
            std::size_t max_elementary_breadth)
      : laws_(std::move(laws)),
        lonely_beta_(std::move(lonely_beta)),
        max_elementary_breadth_(max_elementary_breadth) {
    if (max_elementary_breadth_ < 1) throw error("max elementary breadth must be at least 1");
    if (lonely_beta_ && !laws_.alphabet().count(*lonely_beta_))
      throw error("lonely beta symbol \"" + lonely_beta_->id() +
                  "\" is not in the law alphabet");
  }

  const NGramLawSet& laws() const { return laws_; }
  const std::optional<Symbol>& lonely_beta() const { return lonely_beta_; }
  std::size_t max_elementary_breadth() const { return max_elementary_breadth_; }

 private:
  NGramLawSet laws_;
  std::optional<Symbol> lonely_beta_;
  std::size_t max_elementary_breadth_;
};

/// The binary model used throughout: fib laws, lonely beta 0, and elementary
/// breadth capped at 2 (one less than the longest forbidden gram).
inline TreeModel fib_tree_model() {
  return TreeModel(fib_laws(), Symbol{"0"}, 2);
}

/// Elementary scope additionally enforces the breadth cap; derived scope
/// judges each depth-1 neighborhood on the laws and the lonely-beta clauses
/// only.
enum class NacScope { elementary, derived };

enum class NacReason {
  lonely_beta_loop,     // the loop-free label immediately dominates itself
  forbidden_child_gram, // a node's child labels spell a forbidden gram
  condition_iii,        // breadth exceeds the elementary cap
  root_0_breadth,       // the loop-free label dominates more than one child
};

inline std::string to_string(NacReason r) {
  switch (r) {
    case NacReason::lonely_beta_loop: return "lonely-beta-loop";
    case NacReason::forbidden_child_gram: return "forbidden-child-gram";
    case NacReason::condition_iii: return "condition-III";
    case NacReason::root_0_breadth: return "root-0-breadth";
  }
  throw error("unknown node admissibility reason");
}

struct NacFailure {
  Tree::NodeId node = 0;
  NacReason reason = NacReason::forbidden_child_gram;

  friend bool operator==(const NacFailure&, const NacFailure&) = default;
  friend auto operator<=>(const NacFailure&, const NacFailure&) = default;
};

struct NacVerdict {
  bool ok = true;
  std::vector<NacFailure> failures;

  friend bool operator==(const NacVerdict&, const NacVerdict&) = default;
};

/// Checks every depth-1 neighborhood of the tree against the model: child
/// labels must spell a law-abiding string, and the loop-free label must not
/// dominate itself nor more than one child. Failures are exhaustive, one
/// entry per (node, reason).
inline NacVerdict nac_check(const Tree& tree, const TreeModel& model,
                            NacScope scope = NacScope::derived) {
  for (Tree::NodeId id : walk(tree))
    if (!model.laws().alphabet().count(tree.label(id)))
      throw error("label \"" + tree.label(id).id() + "\" at node " + std::to_string(id) +
                  " is not in the model alphabet");
  NacVerdict v;
  for (Tree::NodeId id : walk(tree)) {
    const auto& kids = tree.children(id);
    if (kids.empty()) continue;
    Word gram;
    for (Tree::NodeId c : kids) gram.push_back(tree.label(c));
    if (!check_string(model.laws(), gram).ok)
      v.failures.push_back({id, NacReason::forbidden_child_gram});
    if (model.lonely_beta() && tree.label(id) == *model.lonely_beta()) {
      const Symbol& beta = *model.lonely_beta();
      if (std::any_of(gram.begin(), gram.end(), [&](const Symbol& s) { return s == beta; }))
        v.failures.push_back({id, NacReason::lonely_beta_loop});
      if (kids.size() > 1) v.failures.push_back({id, NacReason::root_0_breadth});
    }
    if (scope == NacScope::elementary && kids.size() > model.max_elementary_breadth())
      v.failures.push_back({id, NacReason::condition_iii});
  }
  v.ok = v.failures.empty();
  return v;
}

/// A depth-1 tree admitted by the model, tagged by whether it realizes a
/// rewrite rule of the model (constituent) or merely satisfies the laws.
/// A breadth-1 tree always counts as a rule; a wider tree does only when
/// its children cover the whole alphabet, the conjunctive reading of a
/// rule's right-hand side.
struct ElementaryTree {
  Tree tree;
  bool constituent = true;

  friend bool operator==(const ElementaryTree&, const ElementaryTree&) = default;
  friend auto operator<=>(const ElementaryTree&, const ElementaryTree&) = default;
};

inline bool is_constituent_elementary(const TreeModel& model, const Tree& tree) {
  const auto& kids = tree.children(tree.root());
  if (kids.size() <= 1) return true;
  Alphabet seen;
  for (Tree::NodeId c : kids) seen.insert(tree.label(c));
  return seen == model.laws().alphabet();
}

/// All depth-1 trees of exactly the given breadth admitted by the model as
/// elementary, each tagged constituent or not, in tree order.
inline std::vector<ElementaryTree> enumerate_elementary_trees(const TreeModel& model,
                                                              std::size_t breadth) {
  if (breadth < 1 || breadth > model.max_elementary_breadth())
    throw error("breadth " + std::to_string(breadth) + " out of range 1.." +
                std::to_string(model.max_elementary_breadth()));
  std::vector<ElementaryTree> out;
  for (const Symbol& root : model.laws().alphabet())
    for (const Word& children : allowed_ngrams(model.laws(), breadth)) {
      std::vector<Tree> leaves;
      for (const Symbol& c : children) leaves.push_back(Tree::leaf(c));
      Tree t = Tree::node(root, leaves);
      if (!nac_check(t, model, NacScope::elementary).ok) continue;
      out.push_back(ElementaryTree{std::move(t), false});
      out.back().constituent = is_constituent_elementary(model, out.back().tree);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// The admitted depth-1 trees of the given breadth. By default only trees
/// realizing a rule are returned; `include_model_only` adds the trees that
/// pass the laws without corresponding to any rule.
inline std::set<Tree> elementary_trees(const TreeModel& model, std::size_t breadth,
                                       bool include_model_only = false) {
  std::set<Tree> out;
  for (const ElementaryTree& et : enumerate_elementary_trees(model, breadth))
    if (et.constituent || include_model_only) out.insert(et.tree);
  return out;
}

/// Keeps the candidates whose root is widest among those passing the
/// elementary admissibility check: wider trees are preferred unless the
/// extra width breaks a law. Candidates failing the check are dropped; if
/// none passes, the result is empty.
inline std::set<Tree> prefer_maximal(const std::set<Tree>& candidates, const TreeModel& model) {
  if (candidates.empty()) throw error("prefer_maximal requires at least one candidate");
  const Symbol& root_label = candidates.begin()->label(candidates.begin()->root());
  for (const Tree& t : candidates)
    if (t.label(t.root()) != root_label)
      throw error("candidates must share a root label: \"" + root_label.id() + "\" vs \"" +
                  t.label(t.root()).id() + "\"");
  std::vector<const Tree*> passing;
  std::size_t widest = 0;
  for (const Tree& t : candidates)
    if (nac_check(t, model, NacScope::elementary).ok) {
      passing.push_back(&t);
      widest = std::max(widest, t.children(t.root()).size());
    }
  std::set<Tree> out;
  for (const Tree* t : passing)
    if (t->children(t->root()).size() == widest) out.insert(*t);
  return out;
}

struct WindowTrees {
  std::size_t length = 0;  // window width n
  std::size_t start = 0;   // 0-based window start in the source string
  Word gram;
  std::set<Tree> trees;

  friend bool operator==(const WindowTrees&, const WindowTrees&) = default;
};

/// Reads every width-n window of a law-abiding string (2 <= n <= the
/// elementary breadth cap) as the child sequence of a depth-1 tree, and
/// collects the root labels under which that tree is admitted. A window may
/// admit several roots or none.
inline std::vector<WindowTrees> ngram_depth1_trees(const TreeModel& model, const Word& s) {
  Verdict sv = check_string(model.laws(), s);
  if (!sv.ok)
    throw error("string is not law-abiding: \"" + format_word(sv.violations[0].gram) +
                "\" at position " + std::to_string(sv.violations[0].position));
  std::vector<WindowTrees> out;
  const std::size_t top = std::min(s.size(), model.max_elementary_breadth());
  for (std::size_t n = 2; n <= top; ++n) {
    for (std::size_t start = 0; start + n <= s.size(); ++start) {
      WindowTrees wt;
      wt.length = n;
      wt.start = start;
      wt.gram = subword(s, start, n);
      std::vector<Tree> leaves;
      for (const Symbol& c : wt.gram) leaves.push_back(Tree::leaf(c));
      for (const Symbol& root : model.laws().alphabet()) {
        Tree t = Tree::node(root, leaves);
        if (nac_check(t, model, NacScope::elementary).ok) wt.trees.insert(std::move(t));
      }
      out.push_back(std::move(wt));
    }
  }
  return out;
}

}  // namespace lgram
