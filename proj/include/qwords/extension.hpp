#ifndef QWORDS_EXTENSION_HPP_
#define QWORDS_EXTENSION_HPP_

#include <map>
#include <string>
#include <vector>

#include "qwords/oracle.hpp"
#include "qwords/surface.hpp"

namespace qwords {

/// Step 1: every edge of the surface graph replaced by a parallel pair of
/// fresh edges. The boundary word read with the new labels is U', with
/// |U'| = |U| and every doubled symbol occurring exactly once.
struct DoubledGraph {
  SurfaceGraph base;
  AlphabetRef doubled_alphabet;  // base symbols plus the fresh pairs
  std::map<int, std::pair<int, int>> copy_symbols;  // base sym -> (x1, x2)
  Word hamiltonian;                                 // U'

  int copy_symbol(int base_symbol, int copy) const {
    const auto& p = copy_symbols.at(base_symbol);
    return copy == 1 ? p.first : p.second;
  }
};

/// Letter-level doubling: the occurrence that is copy 1 (the +1 occurrence
/// of an alternating letter, the first occurrence of a non-alternating
/// one) becomes x1, the other x2, keeping each occurrence's exponent.
/// Throws on empty or non-quadratic input.
DoubledGraph double_edges(const Word& word);

/// Positional check of the doubled-word subword property: at every vertex
/// and every link junction, the cyclic word U' reads
/// (e_{q,r_q}^{eps_q} e_{q+1,l_{q+1}}^{-eps_{q+1}})^{O_q}.
bool doubled_subword_property(const DoubledGraph& doubled);

/// Step 2: each vertex replaced by a cycle of fresh edges, one cycle
/// position per link entry; the doubled ends attach so that U' becomes a
/// Hamiltonian cycle of the result.
struct ExtendedGraph {
  DoubledGraph doubled;
  AlphabetRef full_alphabet;             // doubled symbols plus cycle symbols
  std::vector<std::vector<int>> cycles;  // per vertex, full-alphabet symbols

  const Word& base_word() const { return doubled.base.word; }
  Word hamiltonian() const { return doubled.hamiltonian.embed(full_alphabet); }
  Word cycle_word(int vertex) const;
  /// The cycle letter x with psi(e1) =_H psi(x) psi(e2) psi(y) at the tail
  /// of the given base edge, and the letter y at its head.
  Letter tail_cycle_letter(int base_symbol) const;
  Letter head_cycle_letter(int base_symbol) const;
};

/// Cycle lengths must equal the vertex degrees (a single loop at a
/// degree-1 vertex); fresh symbols are allocated per vertex.
ExtendedGraph insert_cycles(const DoubledGraph& doubled,
                            const std::map<int, int>& cycle_lengths);

/// Same, with caller-supplied fresh symbol names per vertex.
ExtendedGraph insert_cycles_named(
    const DoubledGraph& doubled,
    const std::vector<std::vector<std::string>>& cycle_names);

/// A labelling of the doubled-and-cycle alphabet by words over the group
/// generators, keyed by symbol name.
struct Labelling {
  std::map<std::string, Word> images;

  const Word& image(const std::string& name) const;
  Word image_of_letter(const ExtendedGraph& graph, const Letter& l) const;
  Word image_of_word(const ExtendedGraph& graph, const Word& w) const;
};

struct LabellingReport {
  std::vector<std::string> non_minimal;   // symbols violating (a)
  std::vector<std::string> bad_relations; // base edges violating (b)
  bool hamiltonian_reduced = false;       // condition (c)
  bool ok() const {
    return non_minimal.empty() && bad_relations.empty() && hamiltonian_reduced;
  }
};

/// Step 3 conditions: (a) every image H-minimal, (b) the doubled-pair
/// relation through the incident cycle letters, (c) the image of U'
/// freely cyclically reduced as written. Throws if a symbol is missing
/// from the labelling.
LabellingReport validate_labelling_report(const ExtendedGraph& graph,
                                          const Labelling& psi,
                                          const GroupOracle& oracle);
bool validate_labelling(const ExtendedGraph& graph, const Labelling& psi,
                        const GroupOracle& oracle);

struct ExtensionClass {
  std::vector<int> vertices;
  HalfInt genus;
  bool orientable = true;
};

/// A declared extension: the extended graph, its labelling and a vertex
/// partition with per-class genus. Validated, not assumed.
struct Extension {
  ExtendedGraph graph;
  Labelling labelling;
  std::vector<ExtensionClass> partition;

  HalfInt total_genus() const;
  bool partition_covers_vertices() const;
  /// Orientable extension: orientable base word and all classes orientable.
  bool orientable() const;
};

/// Sum over inserted cycles of the written lengths of their labels.
long extension_length(const Extension& ext);

/// Verifies the joint-extension condition for the partition class with the
/// given vertex set: genus_H(w_1..w_t) = g - t + 1 for the class genus g
/// (exactly: holds at g - t + 1, fails one step below), plus the degree-1/2
/// exception clause. Budget exhaustion yields kUnknown.
Ternary check_joint_extension(const Extension& ext,
                              const std::vector<int>& class_vertices,
                              const GroupOracle& oracle,
                              const SearchBudget& budget = {});

/// The freely reduced image of the Hamiltonian cycle under the labelling.
Word hamiltonian_label(const Extension& ext);

}  // namespace qwords

#endif  // QWORDS_EXTENSION_HPP_
