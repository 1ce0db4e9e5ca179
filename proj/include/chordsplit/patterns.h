#ifndef CHORDSPLIT_PATTERNS_H_
#define CHORDSPLIT_PATTERNS_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chordsplit/graph.h"

namespace chordsplit {

// A small fixed graph used as a forbidden induced subgraph. Vertex i of the
// pattern is v_{i+1} of its textual definition.
struct Pattern {
  std::string name;
  Graph graph;

  int size() const { return graph.num_vertices(); }
};

// Induced embedding: map[i] is the host vertex playing pattern vertex i.
struct Embedding {
  std::string pattern;
  std::vector<Vertex> map;
};

// Two disjoint, mutually non-adjacent vertex sets of size h, each inducing a
// connected subgraph: an induced member of A_h = {X + Y : X, Y connected on
// h vertices}.
struct APairWitness {
  int h = 0;
  VertexList x;
  VertexList y;
};

// The fifteen catalog patterns in fixed search order: 2k2, c4, c5, c6, c7,
// 2p3, k3+p3, 2k3, butterfly, extended-butterfly, extended-co-p, chair,
// extended-chair, gem, double-gem.
const std::vector<Pattern>& Catalog();

// Case-insensitive lookup. Returns nullptr for an unknown name.
const Pattern* FindPattern(std::string_view name);

// The eight fixed patterns besides holes that are forbidden in
// split-matching-extended graphs, in search order.
std::span<const std::string_view> SmeFixedPatternNames();

// First induced embedding of p into g in lexicographic order of the host
// vertices assigned to pattern vertices 0, 1, 2, ...; std::nullopt if none.
std::optional<Embedding> FindInduced(const Graph& g, const Pattern& p);

// Searches for an induced member of A_h. Connected h-sets are enumerated
// once each (grown from their smallest vertex); the first pair (in
// enumeration order) with one set disjoint from the closed neighborhood of
// the other is returned. Throws std::invalid_argument for h < 1.
std::optional<APairWitness> FindAPair(const Graph& g, int h);

// Calls `visit` on every vertex set of size h inducing a connected subgraph,
// each exactly once, as a sorted list. Stops early when `visit` returns false.
void ForEachConnectedSet(const Graph& g, int h,
                         const std::function<bool(const VertexList&)>& visit);

// Checks that g[subset] is a hereditary induced matching (every component
// has at most two vertices). Returns an offending component otherwise.
std::optional<VertexList> HimCheck(const Graph& g, const VertexSet& subset);

// Connected set of exactly `size` vertices inside `component`, grown
// breadth-first from its smallest vertex. `component` must induce a connected
// subgraph with at least `size` vertices.
VertexList GrowConnectedSubset(const Graph& g, const VertexList& component, int size);

}  // namespace chordsplit

#endif  // CHORDSPLIT_PATTERNS_H_
