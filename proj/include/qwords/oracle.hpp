#ifndef QWORDS_ORACLE_HPP_
#define QWORDS_ORACLE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qwords/half.hpp"
#include "qwords/word.hpp"

namespace qwords {

/// Three-valued search outcome. Budget exhaustion yields kUnknown, never a
/// silent kFalse.
enum class Ternary { kFalse, kTrue, kUnknown };

inline Ternary ternary_of(bool b) { return b ? Ternary::kTrue : Ternary::kFalse; }

/// Explicit caps for the bounded searches; exceeding one makes the search
/// report kUnknown / indeterminate.
struct SearchBudget {
  int ball_radius = 3;
  long long max_candidates = 4'000'000;
};

/// The bound plumbing of the main statements for one genus value:
/// M = |B(4 delta)|, K(n) = 12n - 6 (K(1/2) = 2), l(n) = delta(log2 K + 1).
struct Constants {
  HalfInt delta;
  long M = 1;
  int K = 0;
  double l = 0.0;

  double letter_bound() const { return 12 * l + M + 4; }
};

/// A group given by a generating set, with word-level equality, geodesic
/// length, balls and bounded conjugacy. Read-only after construction; safe
/// for concurrent queries.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual const AlphabetRef& generators() const = 0;
  virtual bool are_equal(const Word& u, const Word& v) const = 0;
  /// Length of a shortest word equal to w.
  virtual int minimal_length(const Word& w) const = 0;
  /// A canonical geodesic representative of w.
  virtual Word minimal_form(const Word& w) const = 0;
  /// All elements of length <= radius, one canonical minimal word each,
  /// sorted by the fixed word order.
  virtual std::vector<Word> ball(int radius) const = 0;
  virtual long ball_size(int radius) const {
    return static_cast<long>(ball(radius).size());
  }
  /// A witness w with u =_H w v w^-1 of minimal length, if conjugate.
  virtual std::optional<Word> are_conjugate(const Word& u,
                                            const Word& v) const = 0;
  virtual HalfInt delta() const = 0;
  /// Group order, when finite.
  virtual std::optional<long> order() const { return std::nullopt; }

  /// Finite-backend element view (engaged when order() is set): elements
  /// are indices 0..order-1. Defaults throw.
  virtual int element_of(const Word& w) const;
  virtual int compose(int a, int b) const;
  virtual int inverse(int a) const;
  virtual Word element_word(int a) const;
  virtual int element_length(int a) const;

  bool is_minimal(const Word& w) const {
    return w.size() == minimal_length(w);
  }
  Constants constants(HalfInt n) const;
};

using OracleRef = std::shared_ptr<const GroupOracle>;

/// The free group on the given generators: delta = 0, everything exact.
OracleRef make_free_oracle(AlphabetRef generators);

/// Finite group from permutation generators (images of 0..degree-1).
OracleRef make_finite_oracle_perm(const std::vector<std::string>& names,
                                  const std::vector<std::vector<int>>& perms);

/// Finite group from a full multiplication table and designated generator
/// elements. table[g][h] = g*h; generators are (name, element) pairs.
OracleRef make_finite_oracle_table(
    const std::vector<std::vector<int>>& table,
    const std::vector<std::pair<std::string, int>>& gens);

/// "free:a,b" or "file:PATH" (permutation or table format, see README).
OracleRef parse_group_spec(const std::string& spec);
OracleRef parse_group_file(const std::string& path);

}  // namespace qwords

#endif  // QWORDS_ORACLE_HPP_
