#ifndef QWORDS_QUADRATIC_HPP_
#define QWORDS_QUADRATIC_HPP_

#include <map>
#include <vector>

#include "qwords/word.hpp"

namespace qwords {

/// Per-symbol signature of a quadratic word: the exponents of the two
/// occurrences of each support symbol in reading order, and the derived
/// orientation o(x) = -eps*delta. A symbol is alternating when o(x) = +1;
/// a quadratic word is orientable when every support symbol is.
struct Signature {
  struct Entry {
    int first_sign;
    int second_sign;
    int first_pos;
    int second_pos;
    int orientation() const { return -first_sign * second_sign; }
    bool alternating() const { return orientation() == 1; }
  };
  std::map<int, Entry> by_symbol;  // keyed by symbol index

  const Entry& at(int symbol) const { return by_symbol.at(symbol); }
};

/// True iff every support symbol of the concatenation occurs exactly twice
/// (counting both exponents).
bool is_quadratic(const std::vector<Word>& tuple);
bool is_quadratic(const Word& w);

/// Requires is_quadratic(w).
Signature signature(const Word& w);

bool is_orientable(const Word& w);

/// True iff two disjoint length-2 subwords of the cyclic components read
/// xy and (xy)^{+-1}. Subwords wrap around; components of length < 2
/// contribute none.
bool is_redundant(const std::vector<Word>& tuple);
bool is_redundant(const Word& w);

/// All words obtained by deleting every occurrence of the symbols in a
/// proper subset of the support, without free reduction, deduplicated by
/// wicks canonical equivalence and returned as canonical representatives
/// in increasing order. Always contains the class of w itself.
std::vector<Word> specialisations(const Word& w);

/// Deletes all occurrences of the given symbols (no free reduction).
Word delete_symbols(const Word& w, const std::vector<int>& symbols);

std::vector<int> support(const Word& w);

}  // namespace qwords

#endif  // QWORDS_QUADRATIC_HPP_
