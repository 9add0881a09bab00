#ifndef QWORDS_WICKS_HPP_
#define QWORDS_WICKS_HPP_

#include <vector>

#include "qwords/half.hpp"
#include "qwords/quadratic.hpp"
#include "qwords/word.hpp"

namespace qwords {

/// A freely cyclically reduced, irredundant quadratic word, the template
/// for elements of its genus.
struct WicksForm {
  Word word;  // canonical representative
  HalfInt genus;
  bool orientable;
};

/// The standard variable alphabet a, b, ..., z, a1, b1, ... used for
/// canonical representatives.
AlphabetRef canonical_alphabet(int size);

/// K(n): the maximal length of a genus-n Wicks form (12n - 6 for n >= 1,
/// 2 for n = 1/2, 0 for n = 0).
int culler_bound(HalfInt n);

/// The least word, under the fixed order, in the orbit of w under cyclic
/// permutation, word inversion, per-letter inversion and support renaming.
/// The result is written over the standard alphabet.
Word canonicalize(const Word& w);

/// Quadratic, freely cyclically reduced, irredundant, of graph genus n.
bool is_wicks_form(const Word& w, HalfInt n);

/// The complete set of Wicks forms of genus exactly n and the requested
/// orientability, up to canonical equivalence, with length at most
/// max_len (default: the Culler bound K(n)). Sorted by the fixed order.
std::vector<WicksForm> enumerate_wicks(HalfInt n, bool orientable,
                                       int max_len = -1);

}  // namespace qwords

#endif  // QWORDS_WICKS_HPP_
