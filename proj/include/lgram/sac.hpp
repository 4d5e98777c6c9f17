#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgram/core.hpp"

namespace lgram {

struct NamedGram {
  Word gram;
  std::string law;  // empty when the gram carries no law name

  friend bool operator==(const NamedGram&, const NamedGram&) = default;
};

/// A finite set of forbidden n-grams over an alphabet. A string is
/// law-abiding iff none of the grams occurs in it as a contiguous subword.
///
/// The stored set is redundancy-free: a gram that properly contains another
/// stored gram is dropped on construction, since any string matching the
/// longer gram already matches the shorter one.
class NGramLawSet {
 public:
  NGramLawSet(Alphabet alphabet, const std::vector<NamedGram>& grams)
      : alphabet_(std::move(alphabet)) {
    for (const NamedGram& ng : grams) {
      if (ng.gram.size() < 2)
        throw error("forbidden gram \"" + format_word(ng.gram) +
                    "\" is too short: grams must have at least 2 symbols");
      for (const Symbol& s : ng.gram)
        if (!alphabet_.count(s))
          throw error("forbidden gram \"" + format_word(ng.gram) + "\" uses symbol \"" +
                      s.id() + "\" which is not in the alphabet");
    }
    // Keep shortest first so proper supergrams of kept grams are filtered.
    std::vector<NamedGram> by_length = grams;
    std::stable_sort(by_length.begin(), by_length.end(),
                     [](const NamedGram& a, const NamedGram& b) {
                       return a.gram.size() < b.gram.size();
                     });
    for (const NamedGram& ng : by_length) {
      bool redundant = false;
      for (const Word& kept : forbidden_)
        if (kept.size() < ng.gram.size() && contains_subword(ng.gram, kept)) {
          redundant = true;
          break;
        }
      if (redundant || forbidden_.count(ng.gram)) continue;
      forbidden_.insert(ng.gram);
      if (!ng.law.empty()) names_.emplace(ng.gram, ng.law);
    }
  }

  /// Builds a law set whose alphabet is exactly the symbols occurring in
  /// the grams.
  static NGramLawSet infer(const std::vector<NamedGram>& grams) {
    Alphabet alphabet;
    for (const NamedGram& ng : grams)
      for (const Symbol& s : ng.gram) alphabet.insert(s);
    return NGramLawSet(std::move(alphabet), grams);
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::set<Word>& forbidden() const { return forbidden_; }

  /// Law name for a stored gram; empty when unnamed.
  std::string name_of(const Word& gram) const {
    auto it = names_.find(gram);
    return it == names_.end() ? std::string{} : it->second;
  }

  std::size_t max_gram_length() const {
    std::size_t n = 0;
    for (const Word& g : forbidden_) n = std::max(n, g.size());
    return n;
  }

  friend bool operator==(const NGramLawSet& a, const NGramLawSet& b) {
    return a.alphabet_ == b.alphabet_ && a.forbidden_ == b.forbidden_ && a.names_ == b.names_;
  }

 private:
  Alphabet alphabet_;
  std::set<Word> forbidden_;
  std::map<Word, std::string> names_;
};

struct Violation {
  std::size_t position = 0;  // 0-based start index in the checked string
  Word gram;
  std::string law;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct Verdict {
  bool ok = true;
  std::vector<Violation> violations;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// The two deterministic Laws over {0,1}: no 0 directly before a 0, and no
/// run of three 1s. The permissive third law (a lone 1 constrains nothing)
/// adds no forbidden gram.
inline NGramLawSet fib_laws() {
  Symbol zero{"0"}, one{"1"};
  return NGramLawSet(Alphabet{zero, one},
                     {NamedGram{Word{zero, zero}, "First Law"},
                      NamedGram{Word{one, one, one}, "Second Law"}});
}

/// Reports every occurrence of every forbidden gram in `s`, in position
/// order. Symbols outside the law alphabet are an error, not a violation.
inline Verdict check_string(const NGramLawSet& laws, const Word& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!laws.alphabet().count(s[i]))
      throw error("symbol \"" + s[i].id() + "\" at position " + std::to_string(i) +
                  " is not in the law alphabet");
  Verdict v;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const Word& g : laws.forbidden()) {
      if (i + g.size() > s.size()) continue;
      if (std::equal(g.begin(), g.end(), s.begin() + static_cast<std::ptrdiff_t>(i)))
        v.violations.push_back(Violation{i, g, laws.name_of(g)});
    }
  v.ok = v.violations.empty();
  return v;
}

/// All length-n strings over the alphabet that contain no forbidden gram.
/// Built by depth-first extension with pruning: a prefix that already ends
/// in a forbidden gram cannot be completed into an allowed string.
inline std::set<Word> allowed_ngrams(const NGramLawSet& laws, std::size_t n) {
  if (n < 1) throw error("n-gram length must be at least 1");
  const std::size_t maxlen = laws.max_gram_length();
  std::set<Word> out;
  Word current;
  auto ends_forbidden = [&] {
    for (const Word& g : laws.forbidden()) {
      if (g.size() > current.size()) continue;
      if (std::equal(g.begin(), g.end(), current.end() - static_cast<std::ptrdiff_t>(g.size())))
        return true;
    }
    return false;
  };
  auto extend = [&](auto&& self) -> void {
    if (current.size() == n) {
      out.insert(current);
      return;
    }
    for (const Symbol& s : laws.alphabet()) {
      current.push_back(s);
      if (maxlen == 0 || !ends_forbidden()) self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

/// Checks the concatenation s1·s2 of two individually law-abiding strings.
/// Any violation in the result straddles the junction, since each piece was
/// clean on its own.
inline Verdict concat_check(const NGramLawSet& laws, const Word& s1, const Word& s2) {
  Verdict v1 = check_string(laws, s1);
  if (!v1.ok)
    throw error("first string is not law-abiding: \"" + format_word(v1.violations[0].gram) +
                "\" at position " + std::to_string(v1.violations[0].position));
  Verdict v2 = check_string(laws, s2);
  if (!v2.ok)
    throw error("second string is not law-abiding: \"" + format_word(v2.violations[0].gram) +
                "\" at position " + std::to_string(v2.violations[0].position));
  return check_string(laws, concat(s1, s2));
}

/// All ordered pairs (u, v) of allowed strings with 2 <= |u|,|v| <= max_len
/// whose concatenation breaks a law. This is the sense in which the set of
/// law-abiding strings is not closed under concatenation.
inline std::set<std::pair<Word, Word>> forbidden_concatenations(const NGramLawSet& laws,
                                                                std::size_t max_len) {
  if (max_len < 2) throw error("max_len must be at least 2");
  std::vector<Word> allowed;
  for (std::size_t n = 2; n <= max_len; ++n)
    for (const Word& w : allowed_ngrams(laws, n)) allowed.push_back(w);
  std::set<std::pair<Word, Word>> out;
  for (const Word& u : allowed)
    for (const Word& v : allowed)
      if (!check_string(laws, concat(u, v)).ok) out.emplace(u, v);
  return out;
}

/// The |s|-n+1 contiguous width-n windows of s, in order, stride 1.
inline std::vector<Word> extract_ngrams(const Word& s, std::size_t n) {
  if (n < 1 || n > s.size())
    throw error("n-gram length " + std::to_string(n) + " out of range for a string of length " +
                std::to_string(s.size()));
  std::vector<Word> out;
  out.reserve(s.size() - n + 1);
  for (std::size_t i = 0; i + n <= s.size(); ++i) out.push_back(subword(s, i, n));
  return out;
}

/// Law-set file format: one directive per line. `forbid: <tokens>` adds a
/// forbidden gram; an immediately preceding `name: <text>` names it. `#`
/// starts a comment, blank lines are ignored. The alphabet is the set of
/// symbols occurring in the grams.
inline NGramLawSet parse_laws(std::string_view text) {
  std::vector<NamedGram> grams;
  std::string pending_name;
  std::size_t pending_line = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line{text.substr(start, end - start)};
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      if (start > text.size()) break;
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.rfind("name:", 0) == 0) {
      std::string rest = line.substr(5);
      const auto ns = rest.find_first_not_of(" \t");
      pending_name = ns == std::string::npos ? std::string{} : rest.substr(ns);
      pending_line = line_no;
    } else if (line.rfind("forbid:", 0) == 0) {
      Word gram;
      try {
        gram = parse_word(line.substr(7));
      } catch (const error& e) {
        throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
      }
      if (gram.empty())
        throw parse_error("line " + std::to_string(line_no) + ": forbid directive has no gram");
      grams.push_back(NamedGram{std::move(gram), pending_name});
      pending_name.clear();
      pending_line = 0;
    } else {
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected a name: or forbid: directive");
    }
    if (start > text.size()) break;
  }
  if (pending_line != 0)
    throw parse_error("line " + std::to_string(pending_line) +
                      ": name: is not followed by a forbid: directive");
  try {
    return NGramLawSet::infer(grams);
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

inline std::string format_laws(const NGramLawSet& laws) {
  std::string out;
  for (const Word& g : laws.forbidden()) {
    if (std::string name = laws.name_of(g); !name.empty()) out += "name: " + name + "\n";
    out += "forbid: " + format_word(g) + "\n";
  }
  return out;
}

}  // namespace lgram
