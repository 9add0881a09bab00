#include "qwords/quadratic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qwords/wicks.hpp"

namespace qwords {

std::vector<int> support(const Word& w) {
  std::set<int> syms;
  for (const auto& l : w.letters()) syms.insert(l.symbol);
  return {syms.begin(), syms.end()};
}

bool is_quadratic(const std::vector<Word>& tuple) {
  std::map<int, int> count;
  for (const auto& w : tuple)
    for (const auto& l : w.letters()) ++count[l.symbol];
  for (const auto& [sym, c] : count)
    if (c != 2) return false;
  return true;
}

bool is_quadratic(const Word& w) { return is_quadratic(std::vector<Word>{w}); }

Signature signature(const Word& w) {
  if (!is_quadratic(w))
    throw std::invalid_argument("signature: word is not quadratic");
  Signature sig;
  for (int i = 0; i < w.size(); ++i) {
    const auto& l = w[i];
    auto it = sig.by_symbol.find(l.symbol);
    if (it == sig.by_symbol.end())
      sig.by_symbol[l.symbol] = {l.sign, 0, i, -1};
    else {
      it->second.second_sign = l.sign;
      it->second.second_pos = i;
    }
  }
  return sig;
}

bool is_orientable(const Word& w) {
  Signature sig = signature(w);
  for (const auto& [sym, e] : sig.by_symbol)
    if (!e.alternating()) return false;
  return true;
}

namespace {

// Length-2 cyclic subwords as ((component, position), letters).
struct Sub2 {
  int word_index;
  int pos;  // subword covers pos and pos+1 mod len
  Letter x, y;
};

std::vector<Sub2> cyclic_pairs(const std::vector<Word>& tuple) {
  std::vector<Sub2> out;
  for (int wi = 0; wi < static_cast<int>(tuple.size()); ++wi) {
    const Word& w = tuple[wi];
    int n = w.size();
    if (n < 2) continue;
    for (int p = 0; p < n; ++p) out.push_back({wi, p, w[p], w[(p + 1) % n]});
  }
  return out;
}

bool overlap(const Sub2& a, const Sub2& b, const std::vector<Word>& tuple) {
  if (a.word_index != b.word_index) return false;
  int n = tuple[a.word_index].size();
  int a1 = a.pos, a2 = (a.pos + 1) % n, b1 = b.pos, b2 = (b.pos + 1) % n;
  return a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
}

}  // namespace

bool is_redundant(const std::vector<Word>& tuple) {
  auto subs = cyclic_pairs(tuple);
  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = i + 1; j < subs.size(); ++j) {
      if (overlap(subs[i], subs[j], tuple)) continue;
      const auto& s = subs[i];
      const auto& t = subs[j];
      bool same = s.x == t.x && s.y == t.y;
      // (xy)^-1 = y^-1 x^-1
      bool inv = t.x == s.y.inverse() && t.y == s.x.inverse();
      if (same || inv) return true;
    }
  }
  return false;
}

bool is_redundant(const Word& w) { return is_redundant(std::vector<Word>{w}); }

Word delete_symbols(const Word& w, const std::vector<int>& symbols) {
  std::set<int> del(symbols.begin(), symbols.end());
  std::vector<Letter> out;
  for (const auto& l : w.letters())
    if (!del.count(l.symbol)) out.push_back(l);
  return Word(w.alphabet(), std::move(out));
}

std::vector<Word> specialisations(const Word& w) {
  if (!is_quadratic(w))
    throw std::invalid_argument("specialisations: word is not quadratic");
  auto supp = support(w);
  int s = static_cast<int>(supp.size());
  std::set<Word> out;
  // Proper subsets D of the support, including the empty one.
  for (unsigned mask = 0; mask + 1 < (1u << s); ++mask) {
    std::vector<int> del;
    for (int i = 0; i < s; ++i)
      if (mask & (1u << i)) del.push_back(supp[i]);
    out.insert(canonicalize(delete_symbols(w, del)));
  }
  return {out.begin(), out.end()};
}

}  // namespace qwords
