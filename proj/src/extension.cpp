#include "qwords/extension.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qwords/detect.hpp"

namespace qwords {

DoubledGraph double_edges(const Word& word) {
  DoubledGraph d{build_graph(word), nullptr, {}, Word::empty(word.alphabet())};
  std::vector<std::string> fresh;
  std::map<int, std::pair<std::string, std::string>> names;
  for (const auto& [sym, entry] : d.base.sig.by_symbol) {
    const std::string base_name = word.alphabet()->name(sym);
    std::string first = word.alphabet()->fresh_name(base_name, fresh);
    fresh.push_back(first);
    std::string second = word.alphabet()->fresh_name(base_name, fresh);
    fresh.push_back(second);
    names[sym] = {first, second};
  }
  d.doubled_alphabet = word.alphabet()->extended(fresh);
  for (const auto& [sym, pair] : names)
    d.copy_symbols[sym] = {*d.doubled_alphabet->find(pair.first),
                           *d.doubled_alphabet->find(pair.second)};
  std::vector<Letter> letters;
  letters.reserve(word.size());
  for (int p = 0; p < word.size(); ++p)
    letters.push_back(
        {d.copy_symbol(word[p].symbol, d.base.copy_index(p)), word[p].sign});
  d.hamiltonian = Word(d.doubled_alphabet, std::move(letters));
  return d;
}

bool doubled_subword_property(const DoubledGraph& d) {
  const Word& prime = d.hamiltonian;
  int n = prime.size();
  for (int v = 0; v < d.base.vertex_count; ++v) {
    const VertexLink& link = d.base.links[v];
    const IncidenceData& inc = d.base.incidence[v];
    int deg = link.degree();
    for (int q = 0; q < deg; ++q) {
      const LinkEntry& cur = link.entries[q];
      const LinkEntry& next = link.entries[(q + 1) % deg];
      Letter first{d.copy_symbol(cur.symbol, inc.r[q]), cur.eps};
      Letter second{d.copy_symbol(next.symbol, inc.l[(q + 1) % deg]),
                    -next.eps};
      int c = cur.junction_corner;
      Letter got_prev = prime[(c - 1 + n) % n];
      Letter got_next = prime[c];
      bool as_written = got_prev == first && got_next == second;
      bool inverted =
          got_prev == second.inverse() && got_next == first.inverse();
      if (inc.O[q] == 1 ? !as_written : !inverted) return false;
    }
  }
  return true;
}

namespace {

void check_cycle_names(const DoubledGraph& d,
                       const std::vector<std::vector<std::string>>& names) {
  if (static_cast<int>(names.size()) != d.base.vertex_count)
    throw std::invalid_argument("insert_cycles: one cycle per vertex required");
  std::set<std::string> seen;
  for (int v = 0; v < d.base.vertex_count; ++v) {
    if (static_cast<int>(names[v].size()) != d.base.degree(v))
      throw std::invalid_argument("insert_cycles: wrong cycle length");
    for (const auto& name : names[v]) {
      if (!Alphabet::valid_name(name))
        throw std::invalid_argument("insert_cycles: bad symbol name " + name);
      if (d.doubled_alphabet->contains(name) || !seen.insert(name).second)
        throw std::invalid_argument("insert_cycles: symbol not fresh: " + name);
    }
  }
}

}  // namespace

ExtendedGraph insert_cycles_named(
    const DoubledGraph& doubled,
    const std::vector<std::vector<std::string>>& cycle_names) {
  check_cycle_names(doubled, cycle_names);
  ExtendedGraph g{doubled, nullptr, {}};
  std::vector<std::string> flat;
  for (const auto& per_vertex : cycle_names)
    flat.insert(flat.end(), per_vertex.begin(), per_vertex.end());
  g.full_alphabet = doubled.doubled_alphabet->extended(flat);
  g.cycles.resize(doubled.base.vertex_count);
  for (int v = 0; v < doubled.base.vertex_count; ++v)
    for (const auto& name : cycle_names[v])
      g.cycles[v].push_back(*g.full_alphabet->find(name));
  return g;
}

ExtendedGraph insert_cycles(const DoubledGraph& doubled,
                            const std::map<int, int>& cycle_lengths) {
  std::vector<std::vector<std::string>> names(doubled.base.vertex_count);
  std::vector<std::string> taken;
  for (int v = 0; v < doubled.base.vertex_count; ++v) {
    auto it = cycle_lengths.find(v);
    if (it == cycle_lengths.end() || it->second != doubled.base.degree(v))
      throw std::invalid_argument("insert_cycles: wrong cycle length");
    for (int i = 0; i < it->second; ++i) {
      std::string name = doubled.doubled_alphabet->fresh_name("c", taken);
      taken.push_back(name);
      names[v].push_back(name);
    }
  }
  return insert_cycles_named(doubled, names);
}

Word ExtendedGraph::cycle_word(int vertex) const {
  std::vector<Letter> letters;
  for (int sym : cycles.at(vertex)) letters.push_back({sym, 1});
  return Word(full_alphabet, std::move(letters));
}

Letter ExtendedGraph::tail_cycle_letter(int base_symbol) const {
  int v = doubled.base.tail_vertex(base_symbol);
  const VertexLink& link = doubled.base.links[v];
  for (int q = 0; q < link.degree(); ++q) {
    const LinkEntry& e = link.entries[q];
    if (e.symbol == base_symbol && e.eps == -1)
      return {cycles[v][q], doubled.base.incidence[v].l[q] == 1 ? 1 : -1};
  }
  throw std::logic_error("tail end missing from its vertex link");
}

Letter ExtendedGraph::head_cycle_letter(int base_symbol) const {
  int v = doubled.base.head_vertex(base_symbol);
  const VertexLink& link = doubled.base.links[v];
  for (int q = 0; q < link.degree(); ++q) {
    const LinkEntry& e = link.entries[q];
    if (e.symbol == base_symbol && e.eps == 1)
      return {cycles[v][q], doubled.base.incidence[v].l[q] == 2 ? 1 : -1};
  }
  throw std::logic_error("head end missing from its vertex link");
}

const Word& Labelling::image(const std::string& name) const {
  auto it = images.find(name);
  if (it == images.end())
    throw std::invalid_argument("labelling: missing symbol " + name);
  return it->second;
}

Word Labelling::image_of_letter(const ExtendedGraph& graph,
                                const Letter& l) const {
  const Word& img = image(graph.full_alphabet->name(l.symbol));
  return l.sign == 1 ? img : img.inverse();
}

Word Labelling::image_of_word(const ExtendedGraph& graph,
                              const Word& w) const {
  if (w.is_empty())
    throw std::invalid_argument("labelling: empty pattern");
  Word out = image_of_letter(graph, w[0]);
  for (int i = 1; i < w.size(); ++i)
    out = out * image_of_letter(graph, w[i]);
  return out;
}

LabellingReport validate_labelling_report(const ExtendedGraph& graph,
                                          const Labelling& psi,
                                          const GroupOracle& oracle) {
  LabellingReport report;
  // (a) every image H-minimal.
  std::vector<std::string> symbols;
  for (const auto& [base_sym, copies] : graph.doubled.copy_symbols) {
    symbols.push_back(graph.full_alphabet->name(copies.first));
    symbols.push_back(graph.full_alphabet->name(copies.second));
  }
  for (const auto& cycle : graph.cycles)
    for (int sym : cycle) symbols.push_back(graph.full_alphabet->name(sym));
  for (const auto& name : symbols)
    if (!oracle.is_minimal(psi.image(name))) report.non_minimal.push_back(name);

  // (b) psi(e1) =_H psi(x) psi(e2) psi(y) for each doubled pair.
  for (const auto& [base_sym, copies] : graph.doubled.copy_symbols) {
    const Word& img1 = psi.image(graph.full_alphabet->name(copies.first));
    const Word& img2 = psi.image(graph.full_alphabet->name(copies.second));
    Word x = psi.image_of_letter(graph, graph.tail_cycle_letter(base_sym));
    Word y = psi.image_of_letter(graph, graph.head_cycle_letter(base_sym));
    if (!oracle.are_equal(img1, x * img2 * y))
      report.bad_relations.push_back(
          graph.doubled.base.word.alphabet()->name(base_sym));
  }

  // (c) the labelled Hamiltonian cycle is freely cyclically reduced as
  // written.
  Word written = psi.image_of_word(graph, graph.hamiltonian());
  report.hamiltonian_reduced = is_cyclically_reduced(written);
  return report;
}

bool validate_labelling(const ExtendedGraph& graph, const Labelling& psi,
                        const GroupOracle& oracle) {
  return validate_labelling_report(graph, psi, oracle).ok();
}

HalfInt Extension::total_genus() const {
  HalfInt total(0);
  for (const auto& cls : partition) total = total + cls.genus;
  return total;
}

bool Extension::partition_covers_vertices() const {
  std::vector<int> all;
  for (const auto& cls : partition)
    all.insert(all.end(), cls.vertices.begin(), cls.vertices.end());
  std::sort(all.begin(), all.end());
  if (static_cast<int>(all.size()) != graph.doubled.base.vertex_count)
    return false;
  for (int v = 0; v < static_cast<int>(all.size()); ++v)
    if (all[v] != v) return false;
  return true;
}

bool Extension::orientable() const {
  if (!is_orientable(graph.base_word())) return false;
  for (const auto& cls : partition)
    if (!cls.orientable) return false;
  return true;
}

long extension_length(const Extension& ext) {
  long total = 0;
  for (const auto& cycle : ext.graph.cycles)
    for (int sym : cycle)
      total += ext.labelling.image(ext.graph.full_alphabet->name(sym)).size();
  return total;
}

Ternary check_joint_extension(const Extension& ext,
                              const std::vector<int>& class_vertices,
                              const GroupOracle& oracle,
                              const SearchBudget& budget) {
  std::vector<int> wanted = class_vertices;
  std::sort(wanted.begin(), wanted.end());
  const ExtensionClass* cls = nullptr;
  for (const auto& c : ext.partition) {
    std::vector<int> have = c.vertices;
    std::sort(have.begin(), have.end());
    if (have == wanted) {
      cls = &c;
      break;
    }
  }
  if (!cls)
    throw std::invalid_argument("check_joint_extension: no such class");

  int t = static_cast<int>(cls->vertices.size());
  std::vector<Word> labels;
  for (int v : cls->vertices)
    labels.push_back(
        ext.labelling.image_of_word(ext.graph, ext.graph.cycle_word(v)));

  HalfInt value = cls->genus - HalfInt(t - 1);
  HalfInt minimum = cls->orientable ? HalfInt(0) : HalfInt::half();
  if (value < minimum) return Ternary::kFalse;

  Ternary at_value =
      genus_tuple(labels, value, cls->orientable, oracle, budget);
  if (at_value != Ternary::kTrue) return at_value;

  HalfInt step = cls->orientable ? HalfInt(1) : HalfInt::half();
  Ternary strict = Ternary::kTrue;
  if (value - step >= minimum) {
    Ternary below =
        genus_tuple(labels, value - step, cls->orientable, oracle, budget);
    if (below == Ternary::kTrue) strict = Ternary::kFalse;
    if (below == Ternary::kUnknown) strict = Ternary::kUnknown;
  }
  if (strict != Ternary::kTrue) return strict;

  // Degree-1/2 exception for a single extended vertex.
  if (t == 1) {
    int deg = ext.graph.doubled.base.degree(cls->vertices[0]);
    if (deg <= 2 && cls->genus < HalfInt::half()) {
      const Word& base = ext.graph.base_word();
      bool square_word = base.size() == 2 && base[0] == base[1];
      if (!square_word) return Ternary::kFalse;
    }
  }
  return Ternary::kTrue;
}

Word hamiltonian_label(const Extension& ext) {
  return free_reduce(
      ext.labelling.image_of_word(ext.graph, ext.graph.hamiltonian()));
}

}  // namespace qwords
