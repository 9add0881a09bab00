#include "qwords/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qwords {

bool Alphabet::valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

AlphabetRef Alphabet::make(std::vector<std::string> names) {
  auto a = std::shared_ptr<Alphabet>(new Alphabet());
  a->names_ = std::move(names);
  for (int i = 0; i < static_cast<int>(a->names_.size()); ++i) {
    const auto& n = a->names_[i];
    if (!valid_name(n))
      throw std::invalid_argument("invalid symbol name: '" + n + "'");
    if (!a->index_.emplace(n, i).second)
      throw std::invalid_argument("duplicate symbol name: '" + n + "'");
  }
  return a;
}

std::optional<int> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::same_as(const Alphabet& other) const {
  return this == &other || names_ == other.names_;
}

AlphabetRef Alphabet::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = names_;
  all.insert(all.end(), extra.begin(), extra.end());
  return make(std::move(all));
}

std::string Alphabet::fresh_name(const std::string& base,
                                 const std::vector<std::string>& taken) const {
  std::set<std::string> avoid(taken.begin(), taken.end());
  for (int k = 1;; ++k) {
    std::string cand = base + std::to_string(k);
    if (!contains(cand) && !avoid.count(cand)) return cand;
  }
}

Word::Word(AlphabetRef alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw std::invalid_argument("word without alphabet");
  for (const auto& l : letters_) {
    if (l.symbol < 0 || l.symbol >= alphabet_->size())
      throw std::invalid_argument("letter symbol out of range");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("letter exponent must be +1 or -1");
  }
}

Word Word::parse(AlphabetRef alphabet, const std::string& text) {
  std::vector<Letter> letters;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') {
      // '1' denotes the empty word; only valid as a standalone token.
      ++i;
      continue;
    }
    int sign;
    char lower;
    if (c >= 'a' && c <= 'z') {
      sign = 1;
      lower = c;
    } else if (c >= 'A' && c <= 'Z') {
      sign = -1;
      lower = static_cast<char>(c - 'A' + 'a');
    } else {
      throw std::invalid_argument(std::string("bad character in word: '") + c +
                                  "'");
    }
    std::string name(1, lower);
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      name.push_back(text[i++]);
    auto sym = alphabet->find(name);
    if (!sym)
      throw std::invalid_argument("symbol '" + name + "' not in alphabet");
    letters.push_back({*sym, sign});
  }
  return Word(std::move(alphabet), std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.sign = -l.sign;
  return Word(alphabet_, std::move(out));
}

Word Word::rotated(int k) const {
  if (letters_.empty()) return *this;
  int n = size();
  k = ((k % n) + n) % n;
  std::vector<Letter> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(letters_[(i + k) % n]);
  return Word(alphabet_, std::move(out));
}

Word Word::subword(int begin, int end) const {
  return Word(alphabet_,
              std::vector<Letter>(letters_.begin() + begin, letters_.begin() + end));
}

Word Word::append(const Letter& l) const {
  auto out = letters_;
  out.push_back(l);
  return Word(alphabet_, std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  if (!a.alphabet_->same_as(*b.alphabet_))
    throw std::invalid_argument("concatenation across different alphabets");
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(a.alphabet_, std::move(out));
}

Word Word::embed(const AlphabetRef& target) const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) {
    auto sym = target->find(alphabet_->name(l.symbol));
    if (!sym)
      throw std::invalid_argument("embed: symbol '" +
                                  alphabet_->name(l.symbol) +
                                  "' missing from target alphabet");
    out.push_back({*sym, l.sign});
  }
  return Word(target, std::move(out));
}

std::string letter_str(const Alphabet& alphabet, const Letter& l) {
  std::string s = alphabet.name(l.symbol);
  if (l.sign < 0) s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) out += letter_str(*alphabet_, l);
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (int i = 0; i < a.size(); ++i)
    if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

AlphabetRef inferred_alphabet(const std::string& text) {
  std::set<std::string> names;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '1') {
      ++i;
      continue;
    }
    char lower;
    if (c >= 'a' && c <= 'z')
      lower = c;
    else if (c >= 'A' && c <= 'Z')
      lower = static_cast<char>(c - 'A' + 'a');
    else
      throw std::invalid_argument(std::string("bad character in word: '") + c +
                                  "'");
    std::string name(1, lower);
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      name.push_back(text[i++]);
    names.insert(name);
  }
  return Alphabet::make({names.begin(), names.end()});
}

bool is_reduced(const Word& w) {
  for (int i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == w[i].inverse()) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  if (w.size() >= 2 && w[0] == w[w.size() - 1].inverse()) return false;
  return true;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(w.alphabet(), std::move(stack));
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  int lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {r.subword(0, lo), r.subword(lo, hi)};
}

CyclicWord cyclic_normal_form(const Word& w) {
  Word core = cyclic_reduce(w).second;
  Word best = core;
  for (int k = 1; k < core.size(); ++k) {
    Word cand = core.rotated(k);
    if (cand < best) best = cand;
  }
  return CyclicWord(best);
}

bool is_conjugate_free(const Word& u, const Word& v) {
  return cyclic_normal_form(u) == cyclic_normal_form(v);
}

namespace {

// Smallest period p of w with rotated(p) == w; p divides |w|.
int cyclic_period(const Word& w) {
  int n = w.size();
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = w[i] == w[(i + p) % n];
    if (ok) return p;
  }
  return n;
}

}  // namespace

std::optional<Word> min_conjugator_free(const Word& u, const Word& v) {
  auto [pu, cu] = cyclic_reduce(u);
  auto [pv, cv] = cyclic_reduce(v);
  if (cu.size() != cv.size()) return std::nullopt;
  if (cu.is_empty()) return free_reduce(pu * pv.inverse());
  int n = cu.size();
  int period = cyclic_period(cu);
  Word root = cu.subword(0, period);
  std::optional<Word> best;
  // u = pu cu pu^-1 and v = pv cv pv^-1; if cv = rotated_k(cu) then
  // conjugators are pu * root^j * cu[0..k) * pv^-1 over all j.
  int jmax = (pu.size() + pv.size()) / period + 2;
  for (int k = 0; k < n; ++k) {
    if (cu.rotated(k) != cv) continue;
    Word prefix = cu.subword(0, k);
    for (int j = -jmax; j <= jmax; ++j) {
      Word mid = Word::empty(cu.alphabet());
      Word r = j >= 0 ? root : root.inverse();
      for (int t = 0; t < std::abs(j); ++t) mid = mid * r;
      Word cand = free_reduce(pu * mid * prefix * pv.inverse());
      if (!best || cand.size() < best->size() ||
          (cand.size() == best->size() && cand < *best))
        best = cand;
    }
  }
  return best;
}

}  // namespace qwords
