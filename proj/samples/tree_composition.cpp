// Lists the depth-1 trees the model admits, grafts a few of them together,
// and prints the composed tree both as a literal and as DOT.

#include <iostream>

#include "lgram/lgram.hpp"

int main() {
  using namespace lgram;

  TreeModel model = fib_tree_model();

  for (std::size_t breadth : {1, 2}) {
    std::cout << "breadth " << breadth << ":";
    for (const ElementaryTree& et : enumerate_elementary_trees(model, breadth)) {
      std::cout << " " << format_tree(et.tree);
      if (!et.constituent) std::cout << "*";
    }
    std::cout << "\n";
  }
  std::cout << "(* marks model-permitted trees that realize no rewrite rule)\n\n";

  // Grow a tree by frontier substitution, always at the first leaf.
  Tree t = parse_tree("1(0,1)");
  for (const char* literal : {"0(1)", "1(1,0)", "1(0,1)"}) {
    Tree guest = parse_tree(literal);
    for (Tree::NodeId leaf : t.leaves()) {
      if (t.label(leaf) == guest.label(guest.root())) {
        t = substitute_frontier(t, guest, leaf);
        break;
      }
    }
  }

  std::cout << "composed: " << format_tree(t) << "\n";
  std::cout << "admissible: " << (nac_check(t, model).ok ? "yes" : "no") << "\n\n";
  std::cout << to_dot(t);
  return 0;
}
