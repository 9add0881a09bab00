#include "qwords/wicks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qwords/surface.hpp"

namespace qwords {

AlphabetRef canonical_alphabet(int size) {
  std::vector<std::string> names;
  names.reserve(size);
  for (int i = 0; i < size; ++i) {
    std::string n(1, static_cast<char>('a' + i % 26));
    if (i >= 26) n += std::to_string(i / 26);
    names.push_back(n);
  }
  return Alphabet::make(std::move(names));
}

int culler_bound(HalfInt n) {
  if (n == HalfInt(0)) return 0;
  if (n == HalfInt::half()) return 2;
  return 6 * n.twice() - 6;  // 12n - 6
}

namespace {

// Renames the support in order of first occurrence and inverts letters so
// every first occurrence has exponent +1; the unique normal form of the
// renaming/letter-inversion orbit of the sequence.
Word first_occurrence_normal(const Word& w, const AlphabetRef& target) {
  std::map<int, std::pair<int, int>> assigned;  // symbol -> (new symbol, flip)
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) {
    auto it = assigned.find(l.symbol);
    if (it == assigned.end())
      it = assigned
               .emplace(l.symbol, std::make_pair(
                                      static_cast<int>(assigned.size()), l.sign))
               .first;
    out.push_back({it->second.first, l.sign * it->second.second});
  }
  return Word(target, std::move(out));
}

}  // namespace

Word canonicalize(const Word& w) {
  int support_size = static_cast<int>(support(w).size());
  AlphabetRef target = canonical_alphabet(support_size);
  if (w.is_empty()) return Word::empty(target);
  std::optional<Word> best;
  for (const Word& base : {w, w.inverse()}) {
    for (int k = 0; k < base.size(); ++k) {
      Word cand = first_occurrence_normal(base.rotated(k), target);
      if (!best || cand < *best) best = cand;
    }
  }
  return *best;
}

bool is_wicks_form(const Word& w, HalfInt n) {
  if (w.is_empty() || !is_quadratic(w)) return false;
  if (!is_cyclically_reduced(w)) return false;
  if (is_redundant(w)) return false;
  return graph_genus(w) == n;
}

namespace {

struct Enumerator {
  HalfInt genus;
  bool orientable;
  int length;
  AlphabetRef alphabet;
  std::vector<Letter> seq;
  std::vector<int> count;       // occurrences placed per symbol
  std::vector<int> first_sign;  // sign of the first occurrence
  int used = 0;
  int open = 0;
  std::set<Word>* out;

  // A just-completed pair (seq[i-1], seq[i]) repeating an earlier
  // non-overlapping pair, or matching its inverse, makes every completion
  // redundant.
  bool partial_redundant(int i) const {
    if (i < 1) return false;
    Letter x = seq[i - 1], y = seq[i];
    for (int j = 0; j + 1 < i - 1; ++j) {
      Letter u = seq[j], v = seq[j + 1];
      if ((u == x && v == y) || (u == y.inverse() && v == x.inverse()))
        return true;
    }
    return false;
  }

  void emit() {
    Word w(alphabet, seq);
    if (!is_cyclically_reduced(w) || is_redundant(w)) return;
    if (is_orientable(w) != orientable) return;
    if (graph_genus(w) != genus) return;
    out->insert(canonicalize(w));
  }

  void extend(int i) {
    if (i == length) {
      if (open == 0) emit();
      return;
    }
    int remaining = length - i;
    // Introduce the next fresh symbol (first occurrences are +1 and in
    // alphabet order; the canonical quotient restores the rest).
    if (open + 1 <= remaining - 1 && used < length / 2) {
      Letter l{used, 1};
      if (i == 0 || seq[i - 1] != l.inverse()) {
        seq.push_back(l);
        ++count[used];
        first_sign[used] = 1;
        ++used;
        ++open;
        if (!partial_redundant(i)) extend(i + 1);
        --used;
        --open;
        --count[used];
        seq.pop_back();
      }
    }
    // Close an open symbol.
    if (open >= 1 && open - 1 <= remaining - 1) {
      for (int s = 0; s < used; ++s) {
        if (count[s] != 1) continue;
        for (int sign : {1, -1}) {
          Letter l{s, sign};
          if (i > 0 && seq[i - 1] == l.inverse()) continue;
          seq.push_back(l);
          ++count[s];
          --open;
          if (!partial_redundant(i)) extend(i + 1);
          ++open;
          --count[s];
          seq.pop_back();
        }
      }
    }
  }
};

}  // namespace

std::vector<WicksForm> enumerate_wicks(HalfInt n, bool orientable,
                                       int max_len) {
  if (n <= HalfInt(0))
    throw std::invalid_argument("enumerate_wicks: genus must be positive");
  if (orientable && !n.is_integer())
    throw std::invalid_argument(
        "enumerate_wicks: orientable genus must be an integer");
  int bound = culler_bound(n);
  if (max_len >= 0) bound = std::min(bound, max_len);
  int min_len = 2 * n.twice();  // 4n, and 2 when n = 1/2

  std::set<Word> found;
  for (int length = min_len; length <= bound; length += 2) {
    Enumerator e;
    e.genus = n;
    e.orientable = orientable;
    e.length = length;
    e.alphabet = canonical_alphabet(length / 2);
    e.count.assign(length / 2, 0);
    e.first_sign.assign(length / 2, 0);
    e.out = &found;
    e.seq.reserve(length);
    e.extend(0);
  }
  std::vector<WicksForm> out;
  out.reserve(found.size());
  for (const auto& w : found) out.push_back({w, n, orientable});
  return out;
}

}  // namespace qwords
