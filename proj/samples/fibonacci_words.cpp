// Derives ten generations of the fib system, checks each one against the
// laws, and tabulates lengths and symbol counts.

#include <iostream>

#include "lgram/lgram.hpp"

int main() {
  using namespace lgram;

  Grammar g = fib_grammar();
  NGramLawSet laws = fib_laws();
  Derivation d = derive(g, 10);
  std::vector<GenerationStats> stats = generation_stats(d);

  std::cout << "grammar " << g.name() << ", axiom " << format_word(g.axiom()) << "\n\n";
  for (std::size_t k = 0; k < d.generations.size(); ++k) {
    const Word& w = d.generations[k];
    Verdict v = check_string(laws, w);
    std::cout << "g" << k << "  len=" << stats[k].length
              << "  ones=" << stats[k].counts.at(Symbol{"1"})
              << "  zeros=" << stats[k].counts.at(Symbol{"0"})
              << "  " << (v.ok ? "ok " : "BAD") << "  ";
    if (stats[k].length <= 34)
      std::cout << format_word(w);
    else
      std::cout << "(" << stats[k].length << " symbols)";
    std::cout << "\n";
  }

  std::cout << "\nallowed 3-grams:";
  for (const Word& gram : allowed_ngrams(laws, 3)) std::cout << " " << format_word(gram);
  std::cout << "\n";
  return 0;
}
