#ifndef QWORDS_DETECT_HPP_
#define QWORDS_DETECT_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwords/oracle.hpp"
#include "qwords/wicks.hpp"

namespace qwords {

/// A cancellation-free match of a word against a Wicks form: non-empty
/// images theta (keyed by form symbol) whose substitution into the form is
/// a rotation of the cyclic core of w, read without cancellation, plus the
/// conjugator R with w =_F R theta(W) R^-1.
struct WicksMatch {
  std::map<int, Word> theta;
  Word conjugator;
};

std::optional<WicksMatch> match_wicks(const Word& w, const WicksForm& form);

/// Substitutes theta into a word over the form alphabet.
Word substitute(const std::map<int, Word>& theta, const Word& pattern,
                const AlphabetRef& target);

/// Least n <= max_n such that a genus-n orientable Wicks form matches w,
/// 0 for the identity; absent outside the commutator subgroup or when
/// every genus up to the cap fails. Exact over the free group.
std::optional<int> genus_plus_free(const Word& w, int max_n);

/// Non-orientable counterpart; the pre-filter is even exponent sums.
std::optional<HalfInt> genus_minus_free(const Word& w, HalfInt max_n);

/// Witnesses (a, b) with [a, b] equal to free_reduce(w); absent when w is
/// not a commutator.
std::optional<std::pair<Word, Word>> is_commutator_free(const Word& w);

/// Witnesses (a, b) with a^2 b^2 equal to free_reduce(w).
std::optional<std::pair<Word, Word>> is_two_squares_free(const Word& w);

/// Outcome of a bounded form search over an oracle.
struct FormWitness {
  int form = 0;
  std::map<std::string, Word> parts;
  Word conjugator;
};

struct OracleAnswer {
  Ternary status = Ternary::kFalse;
  std::optional<FormWitness> witness;
};

/// Bounded search over the commutator form list (the hexagon form with
/// letter bound 12l+M+4, then the three extension-shaped forms with their
/// summed bounds and relations). Free backends decide exactly through
/// Wicks-form matching; finite backends enumerate.
OracleAnswer is_commutator_oracle(const Word& h, const GroupOracle& oracle,
                                  const SearchBudget& budget = {});

/// Bounded search over the square form list (X^2, then A1 A2 with
/// A1 =_H xi A2 xi).
OracleAnswer is_square_oracle(const Word& h, const GroupOracle& oracle,
                              const SearchBudget& budget = {});

/// Independent brute-force oracle: true iff the standard genus-n equation
/// with coefficient w^-1 has a solution with every variable drawn from
/// ball(L). kUnknown only on budget overflow.
Ternary brute_force_genus(const Word& w, HalfInt n, bool orientable,
                          int length_cap, const GroupOracle& oracle,
                          const SearchBudget& budget = {});

/// True iff some conjugate product r_1 c_1 r_1^-1 ... r_t c_t r_t^-1 with
/// bounded conjugators carries a genus-n Wicks-form labelling; exact over
/// the free backend for t = 1 and for genus 0, and over finite backends.
Ternary genus_tuple(const std::vector<Word>& tuple, HalfInt n,
                    bool orientable, const GroupOracle& oracle,
                    const SearchBudget& budget = {});

}  // namespace qwords

#endif  // QWORDS_DETECT_HPP_
