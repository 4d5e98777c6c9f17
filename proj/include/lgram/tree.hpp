#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgram/core.hpp"

namespace lgram {

/// A rooted, directed, ordered, labeled tree. Nodes are addressed by dense
/// ids; every node other than the root has exactly one mother, sibling order
/// is total, and the structure is acyclic and connected by construction.
/// Trees are values: composition returns new trees and never mutates inputs.
class Tree {
 public:
  using NodeId = std::size_t;

  static Tree leaf(Symbol label) {
    Tree t;
    t.nodes_.push_back(Node{std::move(label), std::nullopt, {}});
    return t;
  }

  /// A tree whose root carries `label` and whose subtrees are `children`,
  /// in order.
  static Tree node(Symbol label, const std::vector<Tree>& children) {
    Tree t;
    t.nodes_.push_back(Node{std::move(label), std::nullopt, {}});
    for (const Tree& c : children) {
      NodeId id = t.append_subtree(c, c.root(), 0);
      t.nodes_[0].children.push_back(id);
    }
    return t;
  }

  NodeId root() const { return root_; }
  std::size_t size() const { return nodes_.size(); }

  const Symbol& label(NodeId id) const { return at(id).label; }
  const std::vector<NodeId>& children(NodeId id) const { return at(id).children; }
  std::optional<NodeId> parent(NodeId id) const { return at(id).parent; }
  bool is_leaf(NodeId id) const { return at(id).children.empty(); }

  /// Edge count on the path from the root down to `id`.
  std::size_t depth_of(NodeId id) const {
    std::size_t d = 0;
    for (auto p = at(id).parent; p; p = at(*p).parent) ++d;
    return d;
  }

  /// Longest root-to-leaf path, in edges. A single node has depth 0.
  std::size_t depth() const {
    std::size_t best = 0;
    for (NodeId id = 0; id < nodes_.size(); ++id)
      if (is_leaf(id)) best = std::max(best, depth_of(id));
    return best;
  }

  /// Largest child count over all nodes. A single node has breadth 0.
  std::size_t breadth() const {
    std::size_t best = 0;
    for (const Node& n : nodes_) best = std::max(best, n.children.size());
    return best;
  }

  /// Leaf ids in left-to-right order.
  std::vector<NodeId> leaves() const;

  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return cmp(a, a.root_, b, b.root_);
  }
  friend bool operator==(const Tree& a, const Tree& b) { return (a <=> b) == 0; }

 private:
  struct Node {
    Symbol label;
    std::optional<NodeId> parent;
    std::vector<NodeId> children;
  };

  Tree() = default;

  const Node& at(NodeId id) const {
    if (id >= nodes_.size()) throw error("no such tree node: " + std::to_string(id));
    return nodes_[id];
  }

  // Structural order: label first, then children lexicographically.
  static std::strong_ordering cmp(const Tree& a, NodeId na, const Tree& b, NodeId nb) {
    if (auto c = a.label(na).id() <=> b.label(nb).id(); c != 0) return c;
    const auto& ca = a.children(na);
    const auto& cb = b.children(nb);
    const std::size_t common = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < common; ++i)
      if (auto c = cmp(a, ca[i], b, cb[i]); c != 0) return c;
    return ca.size() <=> cb.size();
  }

  // Copies the subtree of `src` rooted at `src_id` into this tree, below
  // `parent`. Returns the id of the copied root. Does not register the new
  // subtree with the parent's child list.
  NodeId append_subtree(const Tree& src, NodeId src_id, std::optional<NodeId> parent) {
    NodeId id = nodes_.size();
    nodes_.push_back(Node{src.label(src_id), parent, {}});
    for (NodeId c : src.children(src_id)) {
      NodeId cc = append_subtree(src, c, id);
      nodes_[id].children.push_back(cc);
    }
    return id;
  }

  std::vector<Node> nodes_;
  NodeId root_ = 0;

  friend Tree substitute_frontier(const Tree&, const Tree&, NodeId);
  friend Tree substitute_root(const Tree&, const Tree&);
};

/// Depth-first pre-order traversal respecting sibling order. Ancestors are
/// always walked before their descendants, which is what lets dominance be
/// read off as precedence in the walk.
inline std::vector<Tree::NodeId> walk(const Tree& t) {
  std::vector<Tree::NodeId> order;
  order.reserve(t.size());
  std::vector<Tree::NodeId> stack{t.root()};
  while (!stack.empty()) {
    Tree::NodeId id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const auto& cs = t.children(id);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

inline std::vector<Tree::NodeId> Tree::leaves() const {
  std::vector<NodeId> out;
  for (NodeId id : walk(*this))
    if (is_leaf(id)) out.push_back(id);
  return out;
}

/// Left-to-right leaf labels.
inline Word frontier(const Tree& t) {
  Word w;
  for (Tree::NodeId id : t.leaves()) w.push_back(t.label(id));
  return w;
}

/// Substitution at the frontier: identifies the root of `guest` with the
/// leaf `site` of `host`. The site must be a leaf and must carry the same
/// label as the guest's root; the result has |host| + |guest| - 1 nodes.
inline Tree substitute_frontier(const Tree& host, const Tree& guest, Tree::NodeId site) {
  if (site >= host.size()) throw error("no such tree node: " + std::to_string(site));
  if (!host.is_leaf(site))
    throw error("substitution site " + std::to_string(site) + " is not a leaf");
  if (host.label(site) != guest.label(guest.root()))
    throw error("label mismatch: leaf \"" + host.label(site).id() +
                "\" cannot host a tree rooted at \"" + guest.label(guest.root()).id() + "\"");

  // `in_guest` tracks which tree a source id refers to; host and guest may
  // alias the same object, so pointer identity cannot.
  Tree out;
  auto copy = [&](auto&& self, bool in_guest, Tree::NodeId sid,
                  std::optional<Tree::NodeId> parent) -> Tree::NodeId {
    const Tree& src = in_guest ? guest : host;
    Tree::NodeId id = out.nodes_.size();
    out.nodes_.push_back(Tree::Node{src.label(sid), parent, {}});
    const bool splice = !in_guest && sid == site;
    const auto& cs = splice ? guest.children(guest.root()) : src.children(sid);
    for (Tree::NodeId c : cs) {
      Tree::NodeId cc = self(self, in_guest || splice, c, id);
      out.nodes_[id].children.push_back(cc);
    }
    return id;
  };
  copy(copy, false, host.root(), std::nullopt);
  return out;
}

/// Substitution at the root: identifies the two roots (which must share a
/// label) and concatenates their child sequences, first tree's children
/// first. Input order matters.
inline Tree substitute_root(const Tree& t1, const Tree& t2) {
  if (t1.label(t1.root()) != t2.label(t2.root()))
    throw error("label mismatch: cannot identify roots \"" + t1.label(t1.root()).id() +
                "\" and \"" + t2.label(t2.root()).id() + "\"");
  Tree out;
  out.nodes_.push_back(Tree::Node{t1.label(t1.root()), std::nullopt, {}});
  for (const Tree* src : {&t1, &t2}) {
    for (Tree::NodeId c : src->children(src->root())) {
      Tree::NodeId id = out.append_subtree(*src, c, 0);
      out.nodes_[0].children.push_back(id);
    }
  }
  return out;
}

/// Compact one-line tree literal: a leaf is its token, an internal node is
/// `token(child,child,...)`. Tokens in this form must not contain '(' ')'
/// or ','; the JSON serialization has no such restriction.
inline std::string format_tree(const Tree& t) {
  std::string out;
  auto emit = [&](auto&& self, Tree::NodeId id) -> void {
    out += t.label(id).id();
    const auto& cs = t.children(id);
    if (cs.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i > 0) out += ',';
      self(self, cs[i]);
    }
    out += ')';
  };
  emit(emit, t.root());
  return out;
}

/// Parses the literal form produced by format_tree. Whitespace between
/// elements is ignored.
inline Tree parse_tree(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_node = [&](auto&& self) -> Tree {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' && text[pos] != ',' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw parse_error("tree literal: expected a label at offset " +
                                        std::to_string(pos));
    Symbol label{std::string(text.substr(start, pos - start))};
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') return Tree::leaf(std::move(label));
    ++pos;  // '('
    std::vector<Tree> children;
    while (true) {
      children.push_back(self(self));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw parse_error("tree literal: expected ',' or ')' at offset " + std::to_string(pos));
    }
    return Tree::node(std::move(label), children);
  };
  Tree t = parse_node(parse_node);
  skip_ws();
  if (pos != text.size())
    throw parse_error("tree literal: trailing input at offset " + std::to_string(pos));
  return t;
}

/// DOT digraph for the tree. Node names are ids, display labels are symbol
/// tokens, and sibling order is recorded in an `order` edge attribute.
inline std::string to_dot(const Tree& t) {
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "digraph tree {\n";
  for (Tree::NodeId id : walk(t))
    out += "  n" + std::to_string(id) + " [label=" + quoted(t.label(id).id()) + "];\n";
  for (Tree::NodeId id : walk(t)) {
    const auto& cs = t.children(id);
    for (std::size_t i = 0; i < cs.size(); ++i)
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(cs[i]) +
             " [order=" + std::to_string(i) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace lgram
