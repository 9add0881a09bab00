#ifndef QWORDS_WORD_HPP_
#define QWORDS_WORD_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qwords {

class Alphabet;
using AlphabetRef = std::shared_ptr<const Alphabet>;

/// A finite ordered set of interned symbol names. Names follow the word
/// token grammar: a lowercase letter optionally followed by digits ("a",
/// "b2", "c11"). The inverse of a symbol is written with the first letter
/// uppercased, so "abAB" parses as a b a^-1 b^-1 and "a1B2" as a1 b2^-1.
class Alphabet {
 public:
  static AlphabetRef make(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int symbol) const { return names_.at(symbol); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name).has_value(); }

  /// Content equality; words over equal-content alphabets interoperate.
  bool same_as(const Alphabet& other) const;

  /// New alphabet with extra names appended (throws on duplicates).
  AlphabetRef extended(const std::vector<std::string>& extra) const;

  /// Smallest unused name of the form base + digits, also avoiding `taken`.
  std::string fresh_name(const std::string& base,
                         const std::vector<std::string>& taken = {}) const;

  static bool valid_name(const std::string& name);

 private:
  Alphabet() = default;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

/// One signed letter: a symbol of an alphabet with exponent +1 or -1.
struct Letter {
  int symbol;
  int sign;  // +1 or -1

  Letter inverse() const { return {symbol, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  /// Fixed order: symbol index first, then exponent with +1 < -1.
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.symbol <=> b.symbol; c != 0) return c;
    return (a.sign < 0 ? 1 : 0) <=> (b.sign < 0 ? 1 : 0);
  }
};

/// A word over an alphabet: a finite sequence of signed letters, possibly
/// empty. No reduction is implied; "reduced" and "cyclically reduced" are
/// predicates. Immutable after construction.
class Word {
 public:
  Word(AlphabetRef alphabet, std::vector<Letter> letters);
  static Word empty(AlphabetRef alphabet) { return Word(std::move(alphabet), {}); }

  /// Parses the text word format; throws std::invalid_argument on unknown
  /// symbols or malformed tokens. "1" and "" denote the empty word.
  static Word parse(AlphabetRef alphabet, const std::string& text);

  int size() const { return static_cast<int>(letters_.size()); }
  bool is_empty() const { return letters_.empty(); }
  const Letter& operator[](int i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  const AlphabetRef& alphabet() const { return alphabet_; }

  Word inverse() const;
  /// Cyclic left rotation by k: w[k..] w[..k).
  Word rotated(int k) const;
  Word subword(int begin, int end) const;  // [begin, end)
  Word append(const Letter& l) const;

  /// Same-alphabet concatenation (content equality); throws otherwise.
  friend Word operator*(const Word& a, const Word& b);

  /// Re-expresses this word over `target`, matching symbols by name.
  Word embed(const AlphabetRef& target) const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  /// Total order: length, then lexicographic on (symbol, exponent).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  AlphabetRef alphabet_;
  std::vector<Letter> letters_;
};

std::string letter_str(const Alphabet& alphabet, const Letter& l);

/// Alphabet consisting of the symbols mentioned in `text`, sorted by name.
AlphabetRef inferred_alphabet(const std::string& text);

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// The unique reduced word equal to w in the free group.
Word free_reduce(const Word& w);

/// Splits w as conjugator * core * conjugator^-1 with core cyclically
/// reduced; the conjugator is an initial segment of free_reduce(w).
std::pair<Word, Word> cyclic_reduce(const Word& w);

/// Canonical representative of a conjugacy class of the free group: the
/// least rotation of the cyclically reduced core under the fixed order.
class CyclicWord {
 public:
  explicit CyclicWord(Word representative) : rep_(std::move(representative)) {}
  const Word& representative() const { return rep_; }
  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.rep_ == b.rep_;
  }
  friend std::strong_ordering operator<=>(const CyclicWord& a,
                                          const CyclicWord& b) {
    return a.rep_ <=> b.rep_;
  }

 private:
  Word rep_;
};

CyclicWord cyclic_normal_form(const Word& w);

/// Free-group conjugacy: equal cyclic normal forms.
bool is_conjugate_free(const Word& u, const Word& v);

/// A shortest witness w with u = w v w^-1 in the free group, if conjugate.
std::optional<Word> min_conjugator_free(const Word& u, const Word& v);

}  // namespace qwords

#endif  // QWORDS_WORD_HPP_
