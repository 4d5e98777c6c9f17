#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lgram {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised while reading one of the text formats (grammar files, law files,
/// tree literals). Messages name the offending line where one exists.
class parse_error : public error {
 public:
  using error::error;
};

/// An alphabet symbol. Symbols compare by token; a token is a non-empty
/// string without whitespace.
class Symbol {
 public:
  explicit Symbol(std::string id) : id_(std::move(id)) {
    if (id_.empty()) throw error("symbol token must be non-empty");
    for (char c : id_) {
      if (std::isspace(static_cast<unsigned char>(c)))
        throw error("symbol token must not contain whitespace: \"" + id_ + "\"");
    }
  }

  const std::string& id() const { return id_; }
  bool single_char() const { return id_.size() == 1; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::string id_;
};

using Word = std::vector<Symbol>;
using Alphabet = std::set<Symbol>;

/// Reads a word from text. If the text contains whitespace, it is split
/// into whitespace-separated tokens; otherwise every character is taken
/// as a one-character symbol (the compact form used for binary alphabets,
/// where "0110" and "0 1 1 0" name the same word).
inline Word parse_word(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  text = text.substr(first, last - first + 1);
  const bool spaced = std::any_of(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  Word w;
  if (spaced) {
    std::string token;
    std::istringstream in{std::string(text)};
    while (in >> token) w.push_back(Symbol(token));
  } else {
    w.reserve(text.size());
    for (char c : text) w.push_back(Symbol(std::string(1, c)));
  }
  return w;
}

/// Writes a word with whitespace-separated tokens.
inline std::string format_word_spaced(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += w[i].id();
  }
  return out;
}

/// Writes a word compactly (tokens juxtaposed) when every token is a
/// single character, and with separating spaces otherwise.
inline std::string format_word(const Word& w) {
  const bool compact = std::all_of(w.begin(), w.end(),
                                   [](const Symbol& s) { return s.single_char(); });
  if (!compact) return format_word_spaced(w);
  std::string out;
  out.reserve(w.size());
  for (const Symbol& s : w) out += s.id();
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Word subword(const Word& w, std::size_t pos, std::size_t len) {
  if (pos > w.size() || pos + len > w.size())
    throw error("subword range out of bounds");
  return Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
              w.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

/// True when `sub` occurs as a contiguous subword of `w`.
inline bool contains_subword(const Word& w, const Word& sub) {
  if (sub.empty()) return true;
  return std::search(w.begin(), w.end(), sub.begin(), sub.end()) != w.end();
}

inline Alphabet symbols_of(const Word& w) {
  return Alphabet(w.begin(), w.end());
}

}  // namespace lgram
