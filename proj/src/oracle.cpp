#include "qwords/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qwords/wicks.hpp"

namespace qwords {

namespace {
[[noreturn]] void not_finite() {
  throw std::logic_error("element view requires a finite backend");
}
}  // namespace

int GroupOracle::element_of(const Word&) const { not_finite(); }
int GroupOracle::compose(int, int) const { not_finite(); }
int GroupOracle::inverse(int) const { not_finite(); }
Word GroupOracle::element_word(int) const { not_finite(); }
int GroupOracle::element_length(int) const { not_finite(); }

Constants GroupOracle::constants(HalfInt n) const {
  Constants c;
  c.delta = delta();
  // 4*delta = 2*twice(delta) is always an integer for half-integral delta;
  // floor() kept for generality.
  int radius = static_cast<int>(std::floor(4.0 * c.delta.to_double()));
  c.M = ball_size(radius);
  c.K = culler_bound(n);
  if (c.delta == HalfInt(0) || c.K == 0)
    c.l = 0.0;
  else
    c.l = c.delta.to_double() * (std::log2(static_cast<double>(c.K)) + 1.0);
  return c;
}

namespace {

// ---------------------------------------------------------------------
// Free group backend.

class FreeGroupOracle final : public GroupOracle {
 public:
  explicit FreeGroupOracle(AlphabetRef gens) : gens_(std::move(gens)) {}

  const AlphabetRef& generators() const override { return gens_; }

  bool are_equal(const Word& u, const Word& v) const override {
    return free_reduce(u) == free_reduce(v);
  }

  int minimal_length(const Word& w) const override {
    return free_reduce(w).size();
  }

  Word minimal_form(const Word& w) const override { return free_reduce(w); }

  std::vector<Word> ball(int radius) const override {
    std::vector<Word> out;
    Word cur = Word::empty(gens_);
    grow(cur, radius, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  long ball_size(int radius) const override {
    // 1 + 2s * ((2s-1)^r - 1) / (2s - 2) reduced words, s generators.
    long s = gens_->size();
    if (radius <= 0 || s == 0) return 1;
    long total = 1, layer = 2 * s;
    for (int k = 1; k <= radius; ++k) {
      total += layer;
      layer *= 2 * s - 1;
    }
    return total;
  }

  std::optional<Word> are_conjugate(const Word& u,
                                    const Word& v) const override {
    return min_conjugator_free(u, v);
  }

  HalfInt delta() const override { return HalfInt(0); }

 private:
  void grow(Word& cur, int remaining, std::vector<Word>& out) const {
    out.push_back(cur);
    if (remaining == 0) return;
    for (int s = 0; s < gens_->size(); ++s) {
      for (int sign : {1, -1}) {
        Letter l{s, sign};
        if (!cur.is_empty() && cur[cur.size() - 1] == l.inverse()) continue;
        Word next = cur.append(l);
        grow(next, remaining - 1, out);
      }
    }
  }

  AlphabetRef gens_;
};

// ---------------------------------------------------------------------
// Finite group backend: explicit multiplication table, geodesics by BFS,
// delta by the exhaustive thin-triangle fibre check.

// A point of the geometric Cayley graph: a vertex, or the midpoint of the
// undirected edge {u, v} (u < v).
struct CayleyPoint {
  int u;
  int v;  // == u for a vertex point
  bool is_vertex() const { return u == v; }
  friend bool operator==(const CayleyPoint&, const CayleyPoint&) = default;
};

class FiniteGroupOracle final : public GroupOracle {
 public:
  FiniteGroupOracle(AlphabetRef gens, std::vector<std::vector<int>> table,
                    std::vector<int> gen_elements)
      : gens_(std::move(gens)),
        table_(std::move(table)),
        gen_elt_(std::move(gen_elements)) {
    n_ = static_cast<int>(table_.size());
    find_identity();
    build_inverses();
    bfs();
    if (static_cast<int>(std::count_if(dist_.begin(), dist_.end(),
                                       [](int d) { return d >= 0; })) != n_)
      throw std::invalid_argument(
          "finite oracle: generators do not generate the whole group");
    delta_ = compute_delta();
  }

  const AlphabetRef& generators() const override { return gens_; }

  bool are_equal(const Word& u, const Word& v) const override {
    return eval(u) == eval(v);
  }

  int minimal_length(const Word& w) const override { return dist_[eval(w)]; }

  Word minimal_form(const Word& w) const override {
    return minimal_word(eval(w));
  }

  std::vector<Word> ball(int radius) const override {
    std::vector<Word> out;
    for (int g = 0; g < n_; ++g)
      if (dist_[g] <= radius) out.push_back(minimal_word(g));
    std::sort(out.begin(), out.end());
    return out;
  }

  long ball_size(int radius) const override {
    return std::count_if(dist_.begin(), dist_.end(),
                         [&](int d) { return d <= radius; });
  }

  std::optional<Word> are_conjugate(const Word& u,
                                    const Word& v) const override {
    int eu = eval(u), ev = eval(v);
    int best = -1;
    for (int g = 0; g < n_; ++g) {
      if (mult(mult(g, ev), inv_[g]) != eu) continue;
      if (best < 0 || dist_[g] < dist_[best]) best = g;
    }
    if (best < 0) return std::nullopt;
    return minimal_word(best);
  }

  HalfInt delta() const override { return delta_; }
  std::optional<long> order() const override { return n_; }

  int element_of(const Word& w) const override { return eval(w); }
  int compose(int a, int b) const override { return mult(a, b); }
  int inverse(int a) const override { return inv_[a]; }
  Word element_word(int a) const override { return minimal_word(a); }
  int element_length(int a) const override { return dist_[a]; }

  int eval(const Word& w) const {
    int g = identity_;
    for (const auto& l : w.letters()) {
      int s = gen_elt_.at(l.symbol);
      g = mult(g, l.sign == 1 ? s : inv_[s]);
    }
    return g;
  }

 private:
  int mult(int a, int b) const { return table_[a][b]; }

  void find_identity() {
    identity_ = -1;
    for (int e = 0; e < n_; ++e) {
      bool ok = true;
      for (int x = 0; x < n_ && ok; ++x)
        ok = mult(e, x) == x && mult(x, e) == x;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    if (identity_ < 0)
      throw std::invalid_argument("finite oracle: table has no identity");
  }

  void build_inverses() {
    inv_.assign(n_, -1);
    for (int g = 0; g < n_; ++g)
      for (int h = 0; h < n_; ++h)
        if (mult(g, h) == identity_) inv_[g] = h;
    for (int g = 0; g < n_; ++g)
      if (inv_[g] < 0)
        throw std::invalid_argument("finite oracle: table has no inverses");
  }

  // Letters in the fixed order (symbol, +1 before -1); first reach wins,
  // so minimal words are the shortlex-least geodesics.
  std::vector<std::pair<Letter, int>> letter_elements() const {
    std::vector<std::pair<Letter, int>> out;
    for (int s = 0; s < gens_->size(); ++s) {
      out.push_back({{s, 1}, gen_elt_[s]});
      out.push_back({{s, -1}, inv_[gen_elt_[s]]});
    }
    return out;
  }

  void bfs() {
    dist_.assign(n_, -1);
    parent_.assign(n_, -1);
    parent_letter_.assign(n_, Letter{0, 1});
    std::deque<int> queue;
    dist_[identity_] = 0;
    queue.push_back(identity_);
    auto step = letter_elements();
    while (!queue.empty()) {
      int g = queue.front();
      queue.pop_front();
      for (const auto& [letter, elt] : step) {
        int h = mult(g, elt);
        if (dist_[h] >= 0) continue;
        dist_[h] = dist_[g] + 1;
        parent_[h] = g;
        parent_letter_[h] = letter;
        queue.push_back(h);
      }
    }
  }

  Word minimal_word(int g) const {
    std::vector<Letter> letters;
    while (g != identity_) {
      letters.push_back(parent_letter_[g]);
      g = parent_[g];
    }
    std::reverse(letters.begin(), letters.end());
    return Word(gens_, std::move(letters));
  }

  int elt_dist(int a, int b) const { return dist_[mult(inv_[a], b)]; }

  // Twice the distance between two Cayley-graph points.
  int point_dist2(const CayleyPoint& p, const CayleyPoint& q) const {
    if (p.is_vertex() && q.is_vertex()) return 2 * elt_dist(p.u, q.u);
    if (p.is_vertex())
      return 1 + 2 * std::min(elt_dist(p.u, q.u), elt_dist(p.u, q.v));
    if (q.is_vertex()) return point_dist2(q, p);
    if (p == q) return 0;
    int best = std::min({elt_dist(p.u, q.u), elt_dist(p.u, q.v),
                         elt_dist(p.v, q.u), elt_dist(p.v, q.v)});
    return 2 + 2 * best;
  }

  // Points at twice-parameter t2 from `a` on some geodesic from a to b.
  std::vector<CayleyPoint> geodesic_points(int a, int b, int t2) const {
    std::vector<CayleyPoint> out;
    int total = elt_dist(a, b);
    if (t2 % 2 == 0) {
      int t = t2 / 2;
      for (int x = 0; x < n_; ++x)
        if (elt_dist(a, x) == t && elt_dist(x, b) == total - t)
          out.push_back({x, x});
    } else {
      int t = t2 / 2;  // edge from layer t to t+1
      auto step = letter_elements();
      std::set<std::pair<int, int>> seen;
      for (int x = 0; x < n_; ++x) {
        if (elt_dist(a, x) != t) continue;
        for (const auto& [letter, elt] : step) {
          int y = mult(x, elt);
          if (elt_dist(a, y) != t + 1 || elt_dist(y, b) != total - t - 1)
            continue;
          auto key = std::minmax(x, y);
          if (seen.insert(key).second) out.push_back({key.first, key.second});
        }
      }
    }
    return out;
  }

  // Exact thin-triangle constant: for every triangle (corner at the
  // identity by homogeneity) and every tripod parameter, the diameter of
  // the fibre over that parameter, maximised over all geodesic choices.
  HalfInt compute_delta() const {
    int best2 = 0;
    for (int b = 0; b < n_; ++b) {
      for (int c = 0; c < n_; ++c) {
        int dab = elt_dist(identity_, b);
        int dac = elt_dist(identity_, c);
        int dbc = elt_dist(b, c);
        int alpha2 = dab + dac - dbc;  // 2 * alpha_corner
        for (int t2 = 0; t2 <= alpha2; ++t2) {
          auto ps = geodesic_points(identity_, b, t2);
          auto qs = geodesic_points(identity_, c, t2);
          for (const auto& p : ps)
            for (const auto& q : qs)
              best2 = std::max(best2, point_dist2(p, q));
        }
      }
    }
    return HalfInt::from_twice(best2);
  }

  AlphabetRef gens_;
  std::vector<std::vector<int>> table_;
  std::vector<int> gen_elt_;
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> inv_;
  std::vector<int> dist_;
  std::vector<int> parent_;
  std::vector<Letter> parent_letter_;
  HalfInt delta_;
};

// ---------------------------------------------------------------------
// Construction helpers.

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

}  // namespace

OracleRef make_free_oracle(AlphabetRef generators) {
  return std::make_shared<FreeGroupOracle>(std::move(generators));
}

OracleRef make_finite_oracle_perm(const std::vector<std::string>& names,
                                  const std::vector<std::vector<int>>& perms) {
  if (names.size() != perms.size() || names.empty())
    throw std::invalid_argument("perm oracle: need matching names and perms");
  size_t degree = perms[0].size();
  for (const auto& p : perms) {
    if (p.size() != degree)
      throw std::invalid_argument("perm oracle: mixed permutation degrees");
    std::vector<int> seen(degree, 0);
    for (int img : p) {
      if (img < 0 || img >= static_cast<int>(degree) || seen[img]++)
        throw std::invalid_argument("perm oracle: not a permutation");
    }
  }
  // Close under composition: elements in BFS discovery order, identity 0.
  std::vector<int> id(degree);
  for (size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elements{id};
  index[id] = 0;
  std::vector<std::vector<int>> step = perms;
  for (const auto& p : perms) {
    std::vector<int> inv(degree);
    for (size_t i = 0; i < degree; ++i) inv[p[i]] = static_cast<int>(i);
    step.push_back(inv);
  }
  for (size_t head = 0; head < elements.size(); ++head) {
    auto g = elements[head];
    for (const auto& s : step) {
      auto h = compose(g, s);
      if (index.emplace(h, static_cast<int>(elements.size())).second)
        elements.push_back(h);
    }
    if (elements.size() > 20000)
      throw std::invalid_argument("perm oracle: group too large");
  }
  int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a][b] = index.at(compose(elements[a], elements[b]));
  std::vector<int> gen_ids;
  for (const auto& p : perms) gen_ids.push_back(index.at(p));
  return std::make_shared<FiniteGroupOracle>(Alphabet::make(names),
                                             std::move(table),
                                             std::move(gen_ids));
}

OracleRef make_finite_oracle_table(
    const std::vector<std::vector<int>>& table,
    const std::vector<std::pair<std::string, int>>& gens) {
  int n = static_cast<int>(table.size());
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("table oracle: table is not square");
  std::vector<std::string> names;
  std::vector<int> ids;
  for (const auto& [name, elt] : gens) {
    if (elt < 0 || elt >= n)
      throw std::invalid_argument("table oracle: generator index out of range");
    names.push_back(name);
    ids.push_back(elt);
  }
  return std::make_shared<FiniteGroupOracle>(Alphabet::make(names), table,
                                             std::move(ids));
}

namespace {

std::vector<std::vector<int>> parse_cycles(const std::string& text,
                                           int& degree) {
  // "(1 2 3)(4 5)" with 1-based points; fixed points may be omitted.
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  int max_point = degree;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(')
      throw std::invalid_argument("permutation: expected '(' in cycles");
    size_t close = text.find(')', i);
    if (close == std::string::npos)
      throw std::invalid_argument("permutation: unbalanced cycle");
    std::istringstream in(text.substr(i + 1, close - i - 1));
    std::vector<int> cycle;
    std::string tok;
    while (in >> tok) {
      for (char& ch : tok)
        if (ch == ',') ch = ' ';
      std::istringstream in2(tok);
      int p;
      while (in2 >> p) {
        if (p < 1) throw std::invalid_argument("permutation: points are 1-based");
        cycle.push_back(p - 1);
        max_point = std::max(max_point, p);
      }
    }
    if (!cycle.empty()) cycles.push_back(cycle);
    i = close + 1;
  }
  degree = max_point;
  return cycles;
}

std::vector<int> cycles_to_perm(const std::vector<std::vector<int>>& cycles,
                                int degree) {
  std::vector<int> perm(degree);
  for (int i = 0; i < degree; ++i) perm[i] = i;
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i)
      perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return perm;
}

}  // namespace

OracleRef parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  std::string line, kind;
  std::vector<std::pair<std::string, std::string>> perm_lines;
  std::vector<std::vector<int>> table;
  std::vector<std::pair<std::string, int>> table_gens;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (kind.empty()) {
      if (first != "perm" && first != "table")
        throw std::invalid_argument("group file must start with 'perm' or 'table'");
      kind = first;
      continue;
    }
    if (kind == "perm") {
      // "name: (cycles)"
      auto colon = line.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("perm line needs 'name: cycles'");
      std::istringstream ns(line.substr(0, colon));
      std::string name;
      ns >> name;
      perm_lines.emplace_back(name, line.substr(colon + 1));
    } else {
      if (first == "generators:") {
        std::string tok;
        while (ls >> tok) {
          auto eq = tok.find('=');
          if (eq == std::string::npos)
            throw std::invalid_argument("table generators need name=index");
          table_gens.emplace_back(tok.substr(0, eq),
                                  std::stoi(tok.substr(eq + 1)));
        }
      } else {
        std::vector<int> row;
        row.push_back(std::stoi(first));
        int x;
        while (ls >> x) row.push_back(x);
        table.push_back(std::move(row));
      }
    }
  }
  if (kind == "perm") {
    int degree = 1;
    std::vector<std::pair<std::string, std::vector<std::vector<int>>>> parsed;
    for (const auto& [name, cyc] : perm_lines)
      parsed.emplace_back(name, parse_cycles(cyc, degree));
    std::vector<std::string> names;
    std::vector<std::vector<int>> perms;
    for (const auto& [name, cyc] : parsed) {
      names.push_back(name);
      perms.push_back(cycles_to_perm(cyc, degree));
    }
    return make_finite_oracle_perm(names, perms);
  }
  if (kind == "table") return make_finite_oracle_table(table, table_gens);
  throw std::invalid_argument("empty group file");
}

OracleRef parse_group_spec(const std::string& spec) {
  if (spec.rfind("free:", 0) == 0) {
    std::vector<std::string> names;
    std::string rest = spec.substr(5), tok;
    std::istringstream in(rest);
    while (std::getline(in, tok, ','))
      if (!tok.empty()) names.push_back(tok);
    if (names.empty())
      throw std::invalid_argument("free group needs generator names");
    return make_free_oracle(Alphabet::make(names));
  }
  if (spec.rfind("file:", 0) == 0) return parse_group_file(spec.substr(5));
  throw std::invalid_argument("group spec must be free:... or file:...");
}

}  // namespace qwords
