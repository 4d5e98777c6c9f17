#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lgram/core.hpp"
#include "lgram/sac.hpp"

namespace lgram {

/// A 1-D binary cellular automaton rule: one output bit per 3-cell
/// neighborhood. Neighborhoods index the table as the binary number
/// (left, center, right), so entry 6 is the output for 110.
class RuleTable {
 public:
  static RuleTable from_outputs(const std::array<bool, 8>& outputs) {
    RuleTable t;
    t.outputs_ = outputs;
    return t;
  }

  static RuleTable from_wolfram(unsigned code) {
    if (code > 255) throw error("Wolfram code " + std::to_string(code) + " out of range 0..255");
    RuleTable t;
    for (std::size_t v = 0; v < 8; ++v) t.outputs_[v] = (code >> v) & 1u;
    return t;
  }

  bool lookup_bits(bool l, bool c, bool r) const {
    return outputs_[static_cast<std::size_t>(l) << 2 | static_cast<std::size_t>(c) << 1 |
                    static_cast<std::size_t>(r)];
  }

  Symbol lookup(const Symbol& l, const Symbol& c, const Symbol& r) const {
    return to_symbol(lookup_bits(to_bit(l), to_bit(c), to_bit(r)));
  }

  unsigned wolfram_code() const {
    unsigned code = 0;
    for (std::size_t v = 0; v < 8; ++v)
      if (outputs_[v]) code |= 1u << v;
    return code;
  }

  static bool to_bit(const Symbol& s) {
    if (s.id() == "0") return false;
    if (s.id() == "1") return true;
    throw error("symbol \"" + s.id() + "\" is not a binary cell");
  }

  static Symbol to_symbol(bool b) { return Symbol{b ? "1" : "0"}; }

  friend bool operator==(const RuleTable&, const RuleTable&) = default;

 private:
  std::array<bool, 8> outputs_{};
};

/// The majority rule: a cell becomes the value held by at least two of the
/// three cells in its neighborhood (Wolfram number 232).
inline RuleTable gol_table() {
  return RuleTable::from_outputs({false, false, false, true, false, true, true, true});
}

enum class Boundary { periodic };

/// One synchronous update of a row. Both ends wrap around, so every cell has
/// a full neighborhood and the row length never changes.
inline Word ca_step(const RuleTable& table, const Word& row) {
  if (row.empty()) throw error("cellular automaton row is empty");
  const std::size_t n = row.size();
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) {
    try {
      bits[i] = RuleTable::to_bit(row[i]);
    } catch (const error&) {
      throw error("symbol \"" + row[i].id() + "\" at position " + std::to_string(i) +
                  " is not a binary cell");
    }
  }
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(RuleTable::to_symbol(
        table.lookup_bits(bits[(i + n - 1) % n], bits[i], bits[(i + 1) % n])));
  return out;
}

struct History {
  std::vector<Word> rows;  // time flows downward: rows[0] is the initial row
  Boundary boundary = Boundary::periodic;
};

inline History ca_evolve(const RuleTable& table, const Word& initial, std::size_t steps) {
  History h;
  h.rows.reserve(steps + 1);
  h.rows.push_back(initial);
  for (std::size_t i = 0; i < steps; ++i) h.rows.push_back(ca_step(table, h.rows.back()));
  return h;
}

enum class Axis { x, y };

struct GridViolation {
  std::size_t row = 0;
  std::size_t column = 0;
  Word gram;
  std::string law;

  friend bool operator==(const GridViolation&, const GridViolation&) = default;
};

struct AxisVerdict {
  bool ok = true;
  std::vector<GridViolation> violations;

  friend bool operator==(const AxisVerdict&, const AxisVerdict&) = default;
};

/// Applies the string laws across a history: axis x reads each row left to
/// right, axis y reads each column top to bottom. Coordinates locate where
/// a forbidden gram starts.
inline AxisVerdict axis_check(const NGramLawSet& laws, const History& history, Axis axis) {
  if (history.rows.empty()) throw error("history has no rows");
  const std::size_t width = history.rows[0].size();
  for (const Word& row : history.rows)
    if (row.size() != width) throw error("history rows have unequal lengths");
  AxisVerdict out;
  if (axis == Axis::x) {
    for (std::size_t ri = 0; ri < history.rows.size(); ++ri)
      for (const Violation& v : check_string(laws, history.rows[ri]).violations)
        out.violations.push_back(GridViolation{ri, v.position, v.gram, v.law});
  } else {
    for (std::size_t ci = 0; ci < width; ++ci) {
      Word column;
      column.reserve(history.rows.size());
      for (const Word& row : history.rows) column.push_back(row[ci]);
      for (const Violation& v : check_string(laws, column).violations)
        out.violations.push_back(GridViolation{v.position, ci, v.gram, v.law});
    }
  }
  out.ok = out.violations.empty();
  return out;
}

}  // namespace lgram
