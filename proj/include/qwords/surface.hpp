#ifndef QWORDS_SURFACE_HPP_
#define QWORDS_SURFACE_HPP_

#include <vector>

#include "qwords/half.hpp"
#include "qwords/quadratic.hpp"
#include "qwords/word.hpp"

namespace qwords {

/// One end of a graph edge: eps = +1 is the terminal (head) end, read as
/// "e" in a link; eps = -1 is the initial (tail) end, read as "e^-1".
struct EdgeEnd {
  int symbol;
  int eps;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

/// One position of a vertex link: the edge-end e_q^{eps_q} together with
/// the two disk occurrences of the edge adjacent to it. in_pos is the
/// occurrence at the junction with the previous entry, out_pos at the
/// junction with the next one; junction_corner is the disk corner between
/// this entry and the next.
struct LinkEntry {
  int symbol;
  int eps;
  int in_pos;
  int out_pos;
  int junction_corner;
};

struct VertexLink {
  int vertex = 0;
  int orientation = 1;
  std::vector<LinkEntry> entries;
  int degree() const { return static_cast<int>(entries.size()); }
};

/// The incidence sequence O and the book-keeping values mu, nu, l, r of a
/// link, one value per entry.
struct IncidenceData {
  std::vector<int> O;
  std::vector<int> mu, nu, l, r;
};

/// The graph on the closed surface obtained by writing a quadratic word
/// around a disk and gluing equal letters respecting orientation. Edges
/// are the support symbols; vertices are the orbits of the disk corners
/// under the gluing. Immutable after build_graph.
struct SurfaceGraph {
  Word word;
  Signature sig;
  int vertex_count = 0;
  std::vector<int> corner_vertex;              // disk corner -> vertex id
  std::vector<std::vector<int>> vertex_corners;
  std::vector<int> tail_vertex_of;             // by symbol (dense over alphabet)
  std::vector<int> head_vertex_of;
  std::vector<VertexLink> links;               // canonical link per vertex
  std::vector<IncidenceData> incidence;        // aligned with links

  int edge_count() const;
  int degree(int vertex) const { return links[vertex].degree(); }
  int tail_vertex(int symbol) const { return tail_vertex_of[symbol]; }
  int head_vertex(int symbol) const { return head_vertex_of[symbol]; }
  /// Which doubled copy (1 or 2) the occurrence at disk position p becomes:
  /// for an alternating symbol the +1 occurrence is copy 1, for a
  /// non-alternating symbol the first occurrence is copy 1.
  int copy_index(int pos) const;
};

/// Builds the glued-surface graph of a non-empty quadratic word.
SurfaceGraph build_graph(const Word& word);

HalfInt graph_genus(const SurfaceGraph& graph);
HalfInt graph_genus(const Word& word);

/// The link of a vertex read from the given edge-end with the given
/// orientation (+1 = the stored canonical direction, -1 = reversed).
/// Throws if `start` is not an end incident to the vertex.
VertexLink vertex_link(const SurfaceGraph& graph, int vertex, int orientation,
                       const EdgeEnd& start);

/// The incidence sequence O_1..O_d of a link, determined positionally from
/// the disk corners the link walk passes (for a degree-1 vertex O_1 is the
/// link's orientation).
std::vector<int> incidence_sequence(const SurfaceGraph& graph,
                                    const VertexLink& link);

/// The book-keeping values: alternating entries by the mu/nu/l/r function
/// formulas, non-alternating entries by the first-occurrence case split,
/// degree-1 vertices by the parenthetical clause.
IncidenceData bookkeeping(const SurfaceGraph& graph, const VertexLink& link,
                          std::vector<int> O);

}  // namespace qwords

#endif  // QWORDS_SURFACE_HPP_
