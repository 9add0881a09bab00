#include "qwords/surface.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

// The disk model: write U = u_0 ... u_{n-1} around the boundary of a disk,
// one segment per letter, segments directed with the boundary when the
// exponent is +1 and against it otherwise. Corner c of the disk sits
// between segments c-1 and c (mod n). Gluing the two segments that carry
// the same symbol, head to head and tail to tail, identifies corners; the
// orbits are the graph vertices.
//
// Each segment end is an "instance end". Instance end 2p is the start of
// segment p (located at corner p), 2p+1 its end (at corner p+1). A link of
// a vertex is an alternating walk: cross an edge end (between the two
// instance ends glued there), then cross the disk sector at the corner
// where the walk arrived. Reading the edge ends crossed gives the link's
// vertex sequence, and the corners passed give the subword junctions that
// determine the incidence sequence.

namespace qwords {

namespace {

struct DiskModel {
  int n;
  const Word* word;
  const Signature* sig;
  std::vector<int> m2;  // instance end -> glued partner (same edge end)

  int pos(int inst) const { return inst / 2; }
  bool is_start(int inst) const { return inst % 2 == 0; }
  int corner_of(int inst) const {
    return is_start(inst) ? pos(inst) : (pos(inst) + 1) % n;
  }
  // +1 when the instance end is a head (terminal) end of its edge.
  int end_eps(int inst) const {
    int sign = (*word)[pos(inst)].sign;
    return is_start(inst) ? -sign : sign;
  }
  int m1_partner(int inst) const {
    int c = corner_of(inst);
    int start_inst = 2 * c;
    int end_inst = 2 * ((c - 1 + n) % n) + 1;
    return inst == start_inst ? end_inst : start_inst;
  }
  // Instance end of the occurrence at position p carrying the given end.
  int instance_of(int p, int eps) const {
    int sign = (*word)[p].sign;
    bool head = eps == 1;
    bool at_end = (sign == 1) == head;
    return 2 * p + (at_end ? 1 : 0);
  }
};

DiskModel make_model(const Word& word, const Signature& sig) {
  DiskModel m;
  m.n = word.size();
  m.word = &word;
  m.sig = &sig;
  m.m2.assign(2 * m.n, -1);
  for (const auto& [sym, e] : sig.by_symbol) {
    for (int eps : {1, -1}) {
      int a = m.instance_of(e.first_pos, eps);
      int b = m.instance_of(e.second_pos, eps);
      m.m2[a] = b;
      m.m2[b] = a;
    }
  }
  return m;
}

// The link walk starting at the given instance end: cross the edge end
// first, then the corner sector, until the walk closes.
std::vector<LinkEntry> walk_link(const DiskModel& m, int start_inst) {
  std::vector<LinkEntry> entries;
  int cur = start_inst;
  do {
    int other = m.m2[cur];
    LinkEntry e;
    e.symbol = (*m.word)[m.pos(cur)].symbol;
    e.eps = m.end_eps(cur);
    e.in_pos = m.pos(cur);
    e.out_pos = m.pos(other);
    e.junction_corner = m.corner_of(other);
    entries.push_back(e);
    cur = m.m1_partner(other);
  } while (cur != start_inst);
  return entries;
}

// O_q from the junction corner: the two disk positions flanking the corner
// spell either e_q^{eps_q} e_{q+1}^{-eps_{q+1}} (O_q = +1) or its inverse.
int positional_O(const DiskModel& m, const std::vector<LinkEntry>& entries,
                 int q) {
  int d = static_cast<int>(entries.size());
  const LinkEntry& a = entries[q];
  const LinkEntry& b = entries[(q + 1) % d];
  int c = a.junction_corner;
  Letter prev = (*m.word)[(c - 1 + m.n) % m.n];
  Letter next = (*m.word)[c];
  Letter exp1{a.symbol, a.eps};
  Letter exp2{b.symbol, -b.eps};
  if (prev == exp1 && next == exp2) return 1;
  if (prev == exp2.inverse() && next == exp1.inverse()) return -1;
  throw std::logic_error("incidence: junction subword mismatch");
}

int mu_fn(int x) { return x == 1 ? 1 : 2; }
int nu_fn(int x) { return x == 1 ? 2 : 1; }
int l_fn(int x, int y) { return nu_fn(x * y); }
int r_fn(int x, int y) { return mu_fn(x * y); }

// Canonical link of one vertex: start at the least incident edge end
// (ordering tail ends before head ends), in the direction that makes
// O_1 = +1 when one direction does.
VertexLink canonical_link(const DiskModel& m, int vertex,
                          const std::vector<int>& corner_vertex) {
  int best_inst = -1;
  auto key = [&](int inst) {
    int sym = (*m.word)[m.pos(inst)].symbol;
    int eps = m.end_eps(inst);
    return std::tuple<int, int, int>(sym, eps == -1 ? 0 : 1, m.pos(inst));
  };
  for (int inst = 0; inst < 2 * m.n; ++inst) {
    if (corner_vertex[m.corner_of(inst)] != vertex) continue;
    if (best_inst < 0 || key(inst) < key(best_inst)) best_inst = inst;
  }
  int partner = m.m2[best_inst];
  std::vector<LinkEntry> w1 = walk_link(m, best_inst);
  std::vector<LinkEntry> w2 = walk_link(m, partner);

  VertexLink link;
  link.vertex = vertex;
  link.orientation = 1;
  if (w1.size() == 1) {
    link.entries = w1.front().in_pos <= w2.front().in_pos ? w1 : w2;
    return link;
  }
  int o1 = positional_O(m, w1, 0);
  int o2 = positional_O(m, w2, 0);
  if (o1 == 1 && o2 != 1)
    link.entries = w1;
  else if (o2 == 1 && o1 != 1)
    link.entries = w2;
  else
    link.entries = w1.front().in_pos <= w2.front().in_pos ? w1 : w2;
  return link;
}

}  // namespace

int SurfaceGraph::edge_count() const {
  return static_cast<int>(sig.by_symbol.size());
}

int SurfaceGraph::copy_index(int pos) const {
  const auto& e = sig.at(word[pos].symbol);
  if (e.alternating()) return word[pos].sign == 1 ? 1 : 2;
  return pos == e.first_pos ? 1 : 2;
}

SurfaceGraph build_graph(const Word& word) {
  if (word.is_empty())
    throw std::invalid_argument("build_graph: empty word");
  if (!is_quadratic(word))
    throw std::invalid_argument("build_graph: word is not quadratic");

  SurfaceGraph g{word, signature(word)};
  int n = word.size();

  // Union-find over disk corners: gluing an edge identifies the corners
  // at its two tail instances and at its two head instances.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  DiskModel m = make_model(word, g.sig);
  for (const auto& [sym, e] : g.sig.by_symbol) {
    for (int eps : {1, -1}) {
      int a = m.instance_of(e.first_pos, eps);
      int b = m.instance_of(e.second_pos, eps);
      unite(m.corner_of(a), m.corner_of(b));
    }
  }

  g.corner_vertex.assign(n, -1);
  for (int c = 0; c < n; ++c) {
    int root = find(c);
    if (g.corner_vertex[root] < 0) {
      g.corner_vertex[root] = g.vertex_count++;
      g.vertex_corners.emplace_back();
    }
    g.corner_vertex[c] = g.corner_vertex[root];
    g.vertex_corners[g.corner_vertex[c]].push_back(c);
  }

  int max_sym = 0;
  for (const auto& [sym, e] : g.sig.by_symbol) max_sym = std::max(max_sym, sym);
  g.tail_vertex_of.assign(max_sym + 1, -1);
  g.head_vertex_of.assign(max_sym + 1, -1);
  for (const auto& [sym, e] : g.sig.by_symbol) {
    g.tail_vertex_of[sym] =
        g.corner_vertex[m.corner_of(m.instance_of(e.first_pos, -1))];
    g.head_vertex_of[sym] =
        g.corner_vertex[m.corner_of(m.instance_of(e.first_pos, 1))];
  }

  for (int v = 0; v < g.vertex_count; ++v) {
    g.links.push_back(canonical_link(m, v, g.corner_vertex));
    g.incidence.push_back(
        bookkeeping(g, g.links.back(), incidence_sequence(g, g.links.back())));
  }
  return g;
}

HalfInt graph_genus(const SurfaceGraph& g) {
  return HalfInt::from_twice(1 - g.vertex_count + g.edge_count());
}

HalfInt graph_genus(const Word& word) { return graph_genus(build_graph(word)); }

VertexLink vertex_link(const SurfaceGraph& g, int vertex, int orientation,
                       const EdgeEnd& start) {
  if (vertex < 0 || vertex >= g.vertex_count)
    throw std::invalid_argument("vertex_link: no such vertex");
  DiskModel m = make_model(g.word, g.sig);
  const auto& e = g.sig.at(start.symbol);
  int i1 = m.instance_of(e.first_pos, start.eps);
  int i2 = m.instance_of(e.second_pos, start.eps);
  if (g.corner_vertex[m.corner_of(i1)] != vertex)
    throw std::invalid_argument("vertex_link: start end not incident");

  // The two walks from the start end run in opposite directions; pick the
  // one matching the requested orientation relative to the canonical link.
  std::vector<LinkEntry> w1 = walk_link(m, i1);
  std::vector<LinkEntry> w2 = walk_link(m, i2);
  const VertexLink& canon = g.links[vertex];
  auto canonical_in_pos = [&](const LinkEntry& entry) {
    for (const auto& ce : canon.entries)
      if (ce.symbol == entry.symbol && ce.eps == entry.eps) return ce.in_pos;
    throw std::logic_error("vertex_link: end missing from canonical link");
  };
  bool w1_canonical =
      canon.degree() == 1 || w1.front().in_pos == canonical_in_pos(w1.front());
  VertexLink link;
  link.vertex = vertex;
  link.orientation = orientation;
  link.entries = (orientation == 1) == w1_canonical ? w1 : w2;
  return link;
}

std::vector<int> incidence_sequence(const SurfaceGraph& g,
                                    const VertexLink& link) {
  DiskModel m = make_model(g.word, g.sig);
  int d = link.degree();
  std::vector<int> O(d);
  if (d == 1) {
    O[0] = link.orientation;
    return O;
  }
  O[0] = positional_O(m, link.entries, 0);
  for (int q = 1; q < d; ++q) {
    int o_edge = g.sig.at(link.entries[q].symbol).orientation();
    O[q] = O[q - 1] * o_edge;
    assert(O[q] == positional_O(m, link.entries, q));
  }
  return O;
}

IncidenceData bookkeeping(const SurfaceGraph& g, const VertexLink& link,
                          std::vector<int> O) {
  int d = link.degree();
  IncidenceData data;
  data.O = std::move(O);
  data.mu.resize(d);
  data.nu.resize(d);
  data.l.resize(d);
  data.r.resize(d);
  for (int q = 0; q < d; ++q) {
    const LinkEntry& e = link.entries[q];
    const auto& sym = g.sig.at(e.symbol);
    int Oq = data.O[q];
    if (d == 1) {
      data.l[q] = l_fn(Oq, e.eps);
      data.r[q] = r_fn(Oq, e.eps);
      data.mu[q] = Oq == 1 ? data.r[q] : data.l[q];
      data.nu[q] = Oq == 1 ? data.l[q] : data.r[q];
    } else if (sym.alternating()) {
      data.mu[q] = mu_fn(e.eps);
      data.nu[q] = nu_fn(e.eps);
      data.l[q] = l_fn(Oq, e.eps);
      data.r[q] = r_fn(Oq, e.eps);
    } else {
      // Which occurrence of e_q sits at the junction with the previous
      // entry decides the split: the first occurrence there gives
      // (l, r) = (1, 2), otherwise (2, 1).
      bool first_at_in = e.in_pos == sym.first_pos;
      data.l[q] = first_at_in ? 1 : 2;
      data.r[q] = first_at_in ? 2 : 1;
      data.mu[q] = Oq == 1 ? data.r[q] : data.l[q];
      data.nu[q] = Oq == 1 ? data.l[q] : data.r[q];
    }
  }
  return data;
}

}  // namespace qwords
