#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lgram/ca.hpp"
#include "lgram/core.hpp"
#include "lgram/json_io.hpp"
#include "lgram/lsystem.hpp"
#include "lgram/model_check.hpp"
#include "lgram/sac.hpp"
#include "lgram/tree.hpp"
#include "lgram/tree_model.hpp"

namespace lgram::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A grammar argument is a file path when such a file exists, otherwise the
/// name of a built-in grammar.
inline Grammar load_grammar(const std::string& spec) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(fs::path(spec), ec))
    return parse_grammar(read_file(spec), fs::path(spec).stem().string());
  if (auto g = builtin_grammar(spec)) return *g;
  throw error("no grammar file or builtin named \"" + spec +
              "\" (builtins: fib, bif, xor-ab, xor-01)");
}

inline NGramLawSet load_laws(const std::string& laws_file,
                             const std::vector<std::string>& forbids) {
  if (!laws_file.empty() && !forbids.empty())
    throw error("--laws and --forbid are mutually exclusive");
  if (!laws_file.empty()) return parse_laws(read_file(laws_file));
  if (!forbids.empty()) {
    std::vector<NamedGram> grams;
    for (const std::string& f : forbids) grams.push_back(NamedGram{parse_word(f), ""});
    return NGramLawSet::infer(grams);
  }
  return fib_laws();
}

/// Words go on a single space-separated line when every symbol is a single
/// character, one per line otherwise (spaced words would be ambiguous when
/// joined by spaces).
inline void print_words(std::ostream& out, const std::vector<Word>& words) {
  bool compact = true;
  for (const Word& w : words)
    for (const Symbol& s : w)
      if (!s.single_char()) compact = false;
  if (words.empty()) return;
  if (compact) {
    for (std::size_t i = 0; i < words.size(); ++i)
      out << (i ? " " : "") << format_word(words[i]);
    out << "\n";
  } else {
    for (const Word& w : words) out << format_word(w) << "\n";
  }
}

inline void print_verdict(std::ostream& out, const Verdict& v) {
  if (v.ok) {
    out << "ok\n";
    return;
  }
  for (const Violation& x : v.violations) {
    out << "violation at " << x.position << ": " << format_word(x.gram);
    if (!x.law.empty()) out << " (" << x.law << ")";
    out << "\n";
  }
}

inline void print_report(std::ostream& out, const ModelReport& r) {
  if (r.ok) {
    out << "ok: " << r.grammar << " passes generations 0.." << r.bound << "\n";
    return;
  }
  out << "fail: " << r.grammar << " breaks the laws at generation "
      << r.first_failure->generation;
  if (!r.first_failure->verdict.violations.empty()) {
    const Violation& v = r.first_failure->verdict.violations.front();
    out << ": " << format_word(v.gram) << " at position " << v.position;
    if (!v.law.empty()) out << " (" << v.law << ")";
  }
  out << "\n";
}

inline void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

}  // namespace detail

/// Parses and runs one command line (without the program name). Returns the
/// process exit status: 0 for success (and a passing verdict on checking
/// verbs), 1 for a failing verdict, 2 for usage or input errors.
inline int run(const std::vector<std::string>& argv_in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argv_in.size());
  for (std::string a : argv_in) {
    // Long flags spelled with a single dash in common usage.
    if (a == "-g1" || a.rfind("-g1=", 0) == 0 || a == "-g2" || a.rfind("-g2=", 0) == 0)
      a.insert(a.begin(), '-');
    args.push_back(std::move(a));
  }

  CLI::App app{"Lindenmayer rewriting, n-gram laws, tree composition, and model checking"};
  app.name("lgram");
  app.require_subcommand(1);

  // Storage shared across subcommands; only the chosen verb parses into it.
  std::string g_spec = "fib";
  std::string g1_spec, g2_spec;
  std::string s_string;
  std::string laws_file;
  std::vector<std::string> forbids;
  std::size_t steps = 0;
  std::size_t gram_len = 0;
  std::size_t bound = 20;
  bool json = false;
  bool dot = false;

  auto add_laws_opts = [&](CLI::App* sub) {
    sub->add_option("--laws", laws_file, "law-set file (default: built-in laws)");
    sub->add_option("--forbid", forbids, "forbidden gram (repeatable, overrides built-ins)");
  };

  auto* c_derive = app.add_subcommand("derive", "print generations of a grammar");
  c_derive->add_option("-g,--grammar", g_spec, "grammar file or builtin name");
  c_derive->add_option("-n,--steps", steps, "number of rewrite steps")->required();
  c_derive->add_flag("--json", json, "machine-readable output");

  auto* c_stats = app.add_subcommand("stats", "per-generation lengths and symbol counts");
  c_stats->add_option("-g,--grammar", g_spec, "grammar file or builtin name");
  c_stats->add_option("-n,--steps", steps, "number of rewrite steps")->required();
  c_stats->add_flag("--json", json, "machine-readable output");

  auto* c_check = app.add_subcommand("check", "check a string, or a grammar's generations");
  auto* check_s = c_check->add_option("-s,--string", s_string, "string to check");
  auto* check_g = c_check->add_option("-g,--grammar", g_spec, "grammar file or builtin name");
  c_check->add_option("-n,--max-gen", bound, "generation bound for grammar checking");
  add_laws_opts(c_check);
  c_check->add_flag("--json", json, "machine-readable output");
  check_s->excludes(check_g);

  auto* c_ngrams = app.add_subcommand("ngrams", "contiguous windows of a string");
  c_ngrams->add_option("-s,--string", s_string, "source string")->required();
  c_ngrams->add_option("-n,--length", gram_len, "window width")->required();
  c_ngrams->add_flag("--json", json, "machine-readable output");

  auto* c_allowed = app.add_subcommand("allowed", "all law-abiding strings of a given length");
  c_allowed->add_option("-n,--length", gram_len, "string length")->required();
  add_laws_opts(c_allowed);
  c_allowed->add_flag("--json", json, "machine-readable output");

  std::string s1_str, s2_str;
  auto* c_concat = app.add_subcommand("concat", "check the concatenation of two strings");
  c_concat->add_option("--s1", s1_str, "first string")->required();
  c_concat->add_option("--s2", s2_str, "second string")->required();
  add_laws_opts(c_concat);
  c_concat->add_flag("--json", json, "machine-readable output");

  std::size_t closure_max = 3;
  auto* c_closure = app.add_subcommand("closure", "pairs of allowed strings whose join breaks a law");
  c_closure->add_option("--max", closure_max, "maximum piece length (default 3)");
  add_laws_opts(c_closure);
  c_closure->add_flag("--json", json, "machine-readable output");

  std::size_t breadth = 1;
  std::string beta_str;
  std::size_t max_breadth = 0;
  bool show_all = false;
  auto* c_elem = app.add_subcommand("elementary", "depth-1 trees admitted by the model");
  c_elem->add_option("-b,--breadth", breadth, "child count")->required();
  c_elem->add_flag("--all", show_all, "include model-permitted trees that realize no rule");
  add_laws_opts(c_elem);
  auto* elem_beta = c_elem->add_option("--beta", beta_str, "loop-free symbol (custom laws only)");
  auto* elem_maxb =
      c_elem->add_option("--max-breadth", max_breadth, "elementary breadth cap (custom laws only)");
  c_elem->add_flag("--json", json, "machine-readable output");

  std::string op, t1_str, t2_str;
  std::size_t at_leaf = 0;
  auto* c_compose = app.add_subcommand("compose", "substitute one tree into another");
  c_compose->add_option("--op", op, "frontier or root")
      ->required()
      ->check(CLI::IsMember({"frontier", "root"}));
  c_compose->add_option("--t1", t1_str, "host tree literal, e.g. 1(0,1)")->required();
  c_compose->add_option("--t2", t2_str, "guest tree literal")->required();
  c_compose->add_option("--at", at_leaf, "0-based leaf index for frontier substitution");
  c_compose->add_flag("--dot", dot, "DOT output");
  c_compose->add_flag("--json", json, "machine-readable output");

  auto* c_tree = app.add_subcommand("tree", "derivation tree of a grammar");
  c_tree->add_option("-g,--grammar", g_spec, "grammar file or builtin name");
  c_tree->add_option("-n,--steps", steps, "tree depth")->required();
  c_tree->add_flag("--dot", dot, "DOT output");
  c_tree->add_flag("--json", json, "machine-readable output");

  auto* c_points = app.add_subcommand("points", "k/n/s point classes over a derivation tree");
  c_points->add_option("-g,--grammar", g_spec, "grammar file or builtin name");
  c_points->add_option("-n,--steps", steps, "tree depth")->required();
  c_points->add_flag("--json", json, "machine-readable output");

  auto* c_classify = app.add_subcommand("classify", "symmetric or asymmetric grammar");
  c_classify->add_option("-g,--grammar", g_spec, "grammar file or builtin name");
  c_classify->add_flag("--json", json, "machine-readable output");

  auto* c_same = app.add_subcommand("same-model", "do two grammars satisfy the same laws?");
  c_same->add_option("--g1", g1_spec, "first grammar")->required();
  c_same->add_option("--g2", g2_spec, "second grammar")->required();
  c_same->add_option("-n,--max-gen", bound, "generation bound (default 20)");
  add_laws_opts(c_same);
  c_same->add_flag("--json", json, "machine-readable output");

  std::string init_str;
  unsigned rule_code = 232;
  std::string boundary_str = "periodic";
  std::string axis_str;
  auto* c_ca = app.add_subcommand("ca", "run the 1-D cellular automaton");
  c_ca->add_option("--init", init_str, "initial row")->required();
  c_ca->add_option("--steps", steps, "number of updates")->required();
  c_ca->add_option("--rule", rule_code, "Wolfram rule number (default 232, the majority rule)");
  c_ca->add_option("--boundary", boundary_str, "boundary policy")
      ->check(CLI::IsMember({"periodic"}));
  auto* ca_axis = c_ca->add_option("--axis", axis_str, "check laws along x, y, or both")
                      ->check(CLI::IsMember({"x", "y", "both"}));
  add_laws_opts(c_ca);
  c_ca->add_flag("--json", json, "machine-readable output");

  std::string export_grammar, export_laws, out_path;
  auto* c_export = app.add_subcommand("export", "write a builtin grammar or law set to a file");
  auto* exp_g = c_export->add_option("--grammar", export_grammar, "builtin grammar name");
  auto* exp_l = c_export->add_option("--laws", export_laws, "builtin law-set name (fib)");
  c_export->add_option("-o,--out", out_path, "output file (default: standard output)");
  c_export->add_flag("--json", json, "machine-readable output");
  exp_g->excludes(exp_l);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_derive)) {
      Derivation d = derive(detail::load_grammar(g_spec), steps);
      if (json) {
        detail::print_json(out, json_of(d));
      } else {
        for (const Word& g : d.generations) out << format_word(g) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_stats)) {
      Derivation d = derive(detail::load_grammar(g_spec), steps);
      std::vector<GenerationStats> sts = generation_stats(d);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t k = 0; k < sts.size(); ++k) {
          nlohmann::json j = json_of(sts[k]);
          j["generation"] = k;
          arr.push_back(std::move(j));
        }
        detail::print_json(out, {{"grammar", d.grammar.name()}, {"stats", arr}});
      } else {
        for (std::size_t k = 0; k < sts.size(); ++k) {
          out << "g=" << k << " len=" << sts[k].length;
          for (const auto& [sym, cnt] : sts[k].counts) out << " " << sym.id() << "=" << cnt;
          out << "\n";
        }
      }
      return 0;
    }

    if (app.got_subcommand(c_check)) {
      NGramLawSet laws = detail::load_laws(laws_file, forbids);
      if (check_s->count() > 0) {
        Verdict v = check_string(laws, parse_word(s_string));
        if (json)
          detail::print_json(out, json_of(v));
        else
          detail::print_verdict(out, v);
        return v.ok ? 0 : 1;
      }
      if (check_g->count() == 0) {
        err << "error: check needs either -s <string> or -g <grammar>\n";
        return 2;
      }
      ModelReport report = grammar_satisfies(detail::load_grammar(g_spec), laws, bound);
      if (json)
        detail::print_json(out, json_of(report));
      else
        detail::print_report(out, report);
      return report.ok ? 0 : 1;
    }

    if (app.got_subcommand(c_ngrams)) {
      std::vector<Word> windows = extract_ngrams(parse_word(s_string), gram_len);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Word& w : windows) arr.push_back(format_word(w));
        detail::print_json(out, arr);
      } else {
        detail::print_words(out, windows);
      }
      return 0;
    }

    if (app.got_subcommand(c_allowed)) {
      NGramLawSet laws = detail::load_laws(laws_file, forbids);
      std::set<Word> grams = allowed_ngrams(laws, gram_len);
      std::vector<Word> list(grams.begin(), grams.end());
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Word& w : list) arr.push_back(format_word(w));
        detail::print_json(out, arr);
      } else {
        detail::print_words(out, list);
      }
      return 0;
    }

    if (app.got_subcommand(c_concat)) {
      NGramLawSet laws = detail::load_laws(laws_file, forbids);
      Word s1 = parse_word(s1_str), s2 = parse_word(s2_str);
      Verdict v = concat_check(laws, s1, s2);
      if (json) {
        nlohmann::json j = json_of(v);
        j["s1"] = format_word(s1);
        j["s2"] = format_word(s2);
        j["concatenation"] = format_word(concat(s1, s2));
        detail::print_json(out, j);
      } else {
        out << "concatenation: " << format_word(concat(s1, s2)) << "\n";
        detail::print_verdict(out, v);
      }
      return v.ok ? 0 : 1;
    }

    if (app.got_subcommand(c_closure)) {
      NGramLawSet laws = detail::load_laws(laws_file, forbids);
      auto pairs = forbidden_concatenations(laws, closure_max);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [u, v] : pairs)
          arr.push_back({{"first", format_word(u)}, {"second", format_word(v)}});
        detail::print_json(out, arr);
      } else {
        for (const auto& [u, v] : pairs) out << format_word(u) << " " << format_word(v) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_elem)) {
      TreeModel model = [&] {
        if (laws_file.empty() && forbids.empty() && elem_beta->count() == 0 &&
            elem_maxb->count() == 0)
          return fib_tree_model();
        NGramLawSet laws = detail::load_laws(laws_file, forbids);
        std::optional<Symbol> beta;
        if (elem_beta->count() > 0) beta = Symbol{beta_str};
        std::size_t cap = elem_maxb->count() > 0 ? max_breadth
                          : laws.max_gram_length() > 1 ? laws.max_gram_length() - 1
                                                       : 1;
        return TreeModel(std::move(laws), std::move(beta), cap);
      }();
      if (show_all) {
        auto tagged = enumerate_elementary_trees(model, breadth);
        if (json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const ElementaryTree& et : tagged) arr.push_back(json_of(et));
          detail::print_json(out, arr);
        } else {
          for (const ElementaryTree& et : tagged) {
            out << format_tree(et.tree);
            if (!et.constituent) out << " [non-constituent]";
            out << "\n";
          }
        }
      } else {
        std::set<Tree> trees = elementary_trees(model, breadth);
        if (json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const Tree& t : trees) arr.push_back(json_of(t));
          detail::print_json(out, arr);
        } else {
          for (const Tree& t : trees) out << format_tree(t) << "\n";
        }
      }
      return 0;
    }

    if (app.got_subcommand(c_compose)) {
      Tree t1 = parse_tree(t1_str);
      Tree t2 = parse_tree(t2_str);
      Tree result = [&] {
        if (op == "root") return substitute_root(t1, t2);
        std::vector<Tree::NodeId> leaves = t1.leaves();
        if (at_leaf >= leaves.size())
          throw error("leaf index " + std::to_string(at_leaf) + " out of range: host has " +
                      std::to_string(leaves.size()) + " leaves");
        return substitute_frontier(t1, t2, leaves[at_leaf]);
      }();
      if (dot)
        out << to_dot(result);
      else if (json)
        detail::print_json(out, json_of(result));
      else
        out << format_tree(result) << "\n";
      return 0;
    }

    if (app.got_subcommand(c_tree)) {
      DerivationTree dt = derivation_tree(detail::load_grammar(g_spec), steps);
      if (dot) {
        out << to_dot(dt.tree());
      } else if (json) {
        detail::print_json(out, {{"grammar", dt.grammar().name()},
                                 {"depth", dt.depth()},
                                 {"tree", json_of(dt.tree())}});
      } else {
        out << format_tree(dt.tree()) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_points)) {
      DerivationTree dt = derivation_tree(detail::load_grammar(g_spec), steps);
      auto points = classify_points(dt);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (Tree::NodeId id : walk(dt.tree()))
          arr.push_back({{"node", id},
                         {"generation", dt.generation_of(id)},
                         {"label", dt.tree().label(id).id()},
                         {"class", to_string(points.at(id))}});
        detail::print_json(out, {{"grammar", dt.grammar().name()}, {"points", arr}});
      } else {
        for (Tree::NodeId id : walk(dt.tree()))
          out << "node=" << id << " gen=" << dt.generation_of(id)
              << " label=" << dt.tree().label(id).id() << " class=" << to_string(points.at(id))
              << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_classify)) {
      GrammarClass c = classify_grammar(detail::load_grammar(g_spec));
      if (json) {
        detail::print_json(out, json_of(c));
      } else {
        out << to_string(c.kind);
        if (c.lonely_beta) out << " (lonely beta " << c.lonely_beta->id() << ")";
        out << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_same)) {
      NGramLawSet laws = detail::load_laws(laws_file, forbids);
      SameModelResult r = same_model(detail::load_grammar(g1_spec), detail::load_grammar(g2_spec),
                                     laws, bound);
      if (json) {
        detail::print_json(out, json_of(r));
      } else {
        detail::print_report(out, r.first);
        detail::print_report(out, r.second);
        out << "same model: " << (r.same ? "yes" : "no") << "\n";
      }
      return r.same ? 0 : 1;
    }

    if (app.got_subcommand(c_ca)) {
      RuleTable table = RuleTable::from_wolfram(rule_code);
      History h = ca_evolve(table, parse_word(init_str), steps);
      bool violated = false;
      nlohmann::json j{{"history", json_of(h)}};
      std::ostringstream text;
      for (const Word& row : h.rows) text << format_word(row) << "\n";
      if (ca_axis->count() > 0) {
        NGramLawSet laws = detail::load_laws(laws_file, forbids);
        auto run_axis = [&](Axis axis, const char* name) {
          AxisVerdict v = axis_check(laws, h, axis);
          violated = violated || !v.ok;
          j[name] = json_of(v);
          if (v.ok) {
            text << name << ": ok\n";
          } else {
            for (const GridViolation& gv : v.violations) {
              text << name << " violation at row " << gv.row << " column " << gv.column << ": "
                   << format_word(gv.gram);
              if (!gv.law.empty()) text << " (" << gv.law << ")";
              text << "\n";
            }
          }
        };
        if (axis_str == "x" || axis_str == "both") run_axis(Axis::x, "x");
        if (axis_str == "y" || axis_str == "both") run_axis(Axis::y, "y");
      }
      if (json)
        detail::print_json(out, j);
      else
        out << text.str();
      return violated ? 1 : 0;
    }

    if (app.got_subcommand(c_export)) {
      std::string name, content;
      if (exp_g->count() > 0) {
        auto g = builtin_grammar(export_grammar);
        if (!g) throw error("no builtin grammar named \"" + export_grammar + "\"");
        name = export_grammar;
        content = format_grammar(*g);
      } else if (exp_l->count() > 0) {
        if (export_laws != "fib") throw error("no builtin law set named \"" + export_laws + "\"");
        name = export_laws;
        content = format_laws(fib_laws());
      } else {
        err << "error: export needs --grammar <name> or --laws <name>\n";
        return 2;
      }
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw error("cannot write file: " + out_path);
        f << content;
      } else if (json) {
        detail::print_json(out, {{"name", name}, {"content", content}});
      } else {
        out << content;
      }
      return 0;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no command given\n";
  return 2;
}

}  // namespace lgram::cli
