#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "lgram/lgram.hpp"
#include "test_util.hpp"

using namespace lgram;

namespace {

std::set<Tree> TS(std::initializer_list<const char*> lits) {
  std::set<Tree> out;
  for (const char* l : lits) out.insert(T(l));
  return out;
}

bool has_failure(const NacVerdict& v, NacReason r) {
  return std::any_of(v.failures.begin(), v.failures.end(),
                     [&](const NacFailure& f) { return f.reason == r; });
}

}  // namespace

TEST_CASE("tree model construction is validated", "[tree-model]") {
  REQUIRE_THROWS_AS(TreeModel(fib_laws(), S("2"), 2), error);
  REQUIRE_THROWS_AS(TreeModel(fib_laws(), std::nullopt, 0), error);
  TreeModel m = fib_tree_model();
  REQUIRE(m.lonely_beta() == S("0"));
  REQUIRE(m.max_elementary_breadth() == 2);
}

TEST_CASE("nac_check inspects every depth-1 neighborhood", "[tree-model]") {
  TreeModel m = fib_tree_model();
  SECTION("the loop-free symbol may not dominate itself") {
    NacVerdict v = nac_check(T("0(0)"), m);
    REQUIRE_FALSE(v.ok);
    REQUIRE(v.failures == std::vector<NacFailure>{{0, NacReason::lonely_beta_loop}});
  }
  SECTION("the loop-free symbol dominates at most one child") {
    NacVerdict v = nac_check(T("0(1,1)"), m);
    REQUIRE(has_failure(v, NacReason::root_0_breadth));
    REQUIRE_FALSE(has_failure(v, NacReason::forbidden_child_gram));  // "11" is clean
  }
  SECTION("forbidden child strings are reported per node") {
    NacVerdict v = nac_check(T("1(1,1,1)"), m);
    REQUIRE(has_failure(v, NacReason::forbidden_child_gram));
  }
  SECTION("simple admitted trees pass") {
    REQUIRE(nac_check(T("0(1)"), m).ok);
    REQUIRE(nac_check(T("1(0,1)"), m).ok);
    REQUIRE(nac_check(T("1(1,0)"), m).ok);
  }
  SECTION("one node can fail several ways at once") {
    NacVerdict v = nac_check(T("0(0,0)"), m);
    REQUIRE(has_failure(v, NacReason::lonely_beta_loop));
    REQUIRE(has_failure(v, NacReason::root_0_breadth));
    REQUIRE(has_failure(v, NacReason::forbidden_child_gram));
    REQUIRE(v.failures.size() == 3);
  }
  SECTION("failures are found at inner nodes, not just the root") {
    NacVerdict v = nac_check(T("1(0(0),1)"), m);
    REQUIRE_FALSE(v.ok);
    REQUIRE(v.failures.size() == 1);
    REQUIRE(v.failures[0].reason == NacReason::lonely_beta_loop);
    REQUIRE(v.failures[0].node == 1);
  }
  SECTION("foreign labels are errors") {
    REQUIRE_THROWS_WITH(nac_check(T("1(x)"), m),
                        Catch::Matchers::ContainsSubstring("\"x\" at node 1"));
  }
}

TEST_CASE("breadth above the elementary cap is rejected only as elementary", "[tree-model]") {
  TreeModel m = fib_tree_model();
  Tree wide = T("1(1,1,0)");  // child string "110" is clean, but breadth is 3
  SECTION("as a derived neighborhood it passes") {
    REQUIRE(nac_check(wide, m).ok);
    REQUIRE(nac_check(wide, m, NacScope::derived).ok);
  }
  SECTION("as an elementary tree it fails the width rule") {
    NacVerdict v = nac_check(wide, m, NacScope::elementary);
    REQUIRE_FALSE(v.ok);
    REQUIRE(v.failures == std::vector<NacFailure>{{0, NacReason::condition_iii}});
  }
}

TEST_CASE("reason names have stable wire spellings", "[tree-model]") {
  REQUIRE(to_string(NacReason::lonely_beta_loop) == "lonely-beta-loop");
  REQUIRE(to_string(NacReason::forbidden_child_gram) == "forbidden-child-gram");
  REQUIRE(to_string(NacReason::condition_iii) == "condition-III");
  REQUIRE(to_string(NacReason::root_0_breadth) == "root-0-breadth");
}

TEST_CASE("breadth-1 elementary trees are the three admitted shapes", "[tree-model]") {
  TreeModel m = fib_tree_model();
  REQUIRE(elementary_trees(m, 1) == TS({"1(1)", "1(0)", "0(1)"}));
  SECTION("the loop tree is excluded, and by the loop rule specifically") {
    REQUIRE(elementary_trees(m, 1).count(T("0(0)")) == 0);
    NacVerdict v = nac_check(T("0(0)"), m, NacScope::elementary);
    REQUIRE(has_failure(v, NacReason::lonely_beta_loop));
  }
}

TEST_CASE("breadth-2 elementary trees realize the two rewrite orders", "[tree-model]") {
  TreeModel m = fib_tree_model();
  SECTION("rule-realizing trees only, by default") {
    REQUIRE(elementary_trees(m, 2) == TS({"1(0,1)", "1(1,0)"}));
  }
  SECTION("no breadth-2 tree is rooted at the loop-free symbol") {
    for (const Tree& t : elementary_trees(m, 2, true)) REQUIRE(t.label(t.root()) == S("1"));
  }
  SECTION("the clean-but-rule-less tree appears only under the tag") {
    REQUIRE(elementary_trees(m, 2).count(T("1(1,1)")) == 0);
    REQUIRE(elementary_trees(m, 2, true) == TS({"1(0,1)", "1(1,0)", "1(1,1)"}));

    auto tagged = enumerate_elementary_trees(m, 2);
    REQUIRE(tagged.size() == 3);
    for (const ElementaryTree& et : tagged)
      REQUIRE(et.constituent == (et.tree != T("1(1,1)")));
  }
  SECTION("out-of-range breadth is an error") {
    REQUIRE_THROWS_AS(enumerate_elementary_trees(m, 0), error);
    REQUIRE_THROWS_AS(enumerate_elementary_trees(m, 3), error);
  }
}

TEST_CASE("every enumerated elementary tree passes its own check", "[tree-model]") {
  TreeModel m = fib_tree_model();
  for (std::size_t b = 1; b <= m.max_elementary_breadth(); ++b)
    for (const ElementaryTree& et : enumerate_elementary_trees(m, b)) {
      REQUIRE(nac_check(et.tree, m, NacScope::elementary).ok);
      REQUIRE(et.tree.depth() == 1);
      REQUIRE(et.tree.children(et.tree.root()).size() == b);
    }
}

TEST_CASE("prefer_maximal keeps the widest admissible candidates", "[tree-model]") {
  TreeModel m = fib_tree_model();
  SECTION("wider wins") {
    REQUIRE(prefer_maximal(TS({"1(1)", "1(0,1)"}), m) == TS({"1(0,1)"}));
  }
  SECTION("singleton survives") {
    REQUIRE(prefer_maximal(TS({"0(1)"}), m) == TS({"0(1)"}));
  }
  SECTION("ties keep all candidates of the winning width") {
    REQUIRE(prefer_maximal(TS({"1(0)", "1(1)"}), m) == TS({"1(0)", "1(1)"}));
    REQUIRE(prefer_maximal(TS({"1(0,1)", "1(1,0)", "1(1)"}), m) == TS({"1(0,1)", "1(1,0)"}));
  }
  SECTION("a wide candidate that breaks the rules cannot win") {
    REQUIRE(prefer_maximal(TS({"1(1)", "1(1,1,1)"}), m) == TS({"1(1)"}));
  }
  SECTION("no admissible candidate gives the empty set") {
    REQUIRE(prefer_maximal(TS({"0(0)"}), m).empty());
  }
  SECTION("the empty input is an error") {
    REQUIRE_THROWS_AS(prefer_maximal({}, m), error);
  }
  SECTION("mixed root labels are an error") {
    REQUIRE_THROWS_WITH(prefer_maximal(TS({"1(0)", "0(1)"}), m),
                        Catch::Matchers::ContainsSubstring("share a root label"));
  }
  SECTION("never keeps a tree when a strictly wider admissible one is present") {
    auto all = TS({"1(1)", "1(0)", "1(0,1)", "1(1,0)", "1(1,1)"});
    auto kept = prefer_maximal(all, m);
    for (const Tree& k : kept)
      for (const Tree& other : all)
        if (nac_check(other, m, NacScope::elementary).ok)
          REQUIRE(other.children(other.root()).size() <= k.children(k.root()).size());
  }
}

TEST_CASE("windows of a clean string become depth-1 trees", "[tree-model]") {
  TreeModel m = fib_tree_model();
  SECTION("each window is rooted by the non-loop-free symbol") {
    auto windows = ngram_depth1_trees(m, W("01"));
    REQUIRE(windows.size() == 1);
    REQUIRE(windows[0].length == 2);
    REQUIRE(windows[0].start == 0);
    REQUIRE(windows[0].gram == W("01"));
    REQUIRE(windows[0].trees == TS({"1(0,1)"}));
  }
  SECTION("order within the window is preserved") {
    auto windows = ngram_depth1_trees(m, W("10"));
    REQUIRE(windows[0].trees == TS({"1(1,0)"}));
  }
  SECTION("a clean window without a rule still gets its root") {
    auto windows = ngram_depth1_trees(m, W("11"));
    REQUIRE(windows[0].trees == TS({"1(1,1)"}));
  }
  SECTION("a longer string yields one entry per window") {
    auto windows = ngram_depth1_trees(m, W("10101101"));
    REQUIRE(windows.size() == 7);  // width 2 only: the cap stops at breadth 2
    for (const auto& wt : windows) {
      REQUIRE(wt.length == 2);
      REQUIRE(wt.trees.size() == 1);
      const Tree& t = *wt.trees.begin();
      REQUIRE(t.label(t.root()) == S("1"));
      REQUIRE(frontier(t) == wt.gram);
    }
  }
  SECTION("strings shorter than any window yield nothing") {
    REQUIRE(ngram_depth1_trees(m, W("1")).empty());
  }
  SECTION("ill-formed strings are errors") {
    REQUIRE_THROWS_WITH(ngram_depth1_trees(m, W("1001")),
                        Catch::Matchers::ContainsSubstring("not law-abiding"));
  }
}

TEST_CASE("derivation trees satisfy the node conditions at every depth", "[tree-model]") {
  TreeModel m = fib_tree_model();
  for (const Grammar& g : {fib_grammar(), bif_grammar()}) {
    for (std::size_t depth = 0; depth <= 12; ++depth) {
      DerivationTree dt = derivation_tree(g, depth);
      REQUIRE(nac_check(dt.tree(), m).ok);
    }
    DerivationTree deep = derivation_tree(g, 12);
    const Tree& t = deep.tree();
    for (Tree::NodeId id : walk(t)) {
      const auto& kids = t.children(id);
      if (kids.empty()) continue;
      Word gram;
      for (Tree::NodeId c : kids) gram.push_back(t.label(c));
      if (kids.size() == 2) REQUIRE(gram == g.rule_for(S("1")));
      if (kids.size() == 1) {
        REQUIRE(t.label(id) == S("0"));
        REQUIRE(gram == W("1"));
      }
    }
  }
}

TEST_CASE("composition leaves untouched neighborhoods intact", "[tree-model]") {
  TreeModel m = fib_tree_model();
  Tree host = T("1(0(1),1(0,1))");
  Tree guest = T("1(1,0)");
  REQUIRE(nac_check(host, m).ok);
  REQUIRE(nac_check(guest, m).ok);
  for (Tree::NodeId leaf : host.leaves()) {
    if (host.label(leaf) != guest.label(guest.root())) continue;
    REQUIRE(nac_check(substitute_frontier(host, guest, leaf), m).ok);
  }
  REQUIRE(nac_check(substitute_root(T("1(0)"), T("1(1)")), m).ok);
}
