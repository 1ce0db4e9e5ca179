#ifndef CHORDSPLIT_CHORDAL_H_
#define CHORDSPLIT_CHORDAL_H_

#include <optional>
#include <span>
#include <vector>

#include "chordsplit/graph.h"

namespace chordsplit {

// A vertex whose later neighbors x and y (in some elimination ordering) are
// non-adjacent.
struct EliminationFailure {
  Vertex vertex;
  Vertex x;
  Vertex y;

  bool operator==(const EliminationFailure&) const = default;
};

struct EliminationResult {
  std::vector<Vertex> ordering;
  std::optional<EliminationFailure> failure;

  bool is_peo() const { return !failure.has_value(); }
};

// Induced cycle on at least four vertices, listed in cyclic order.
struct HoleWitness {
  std::vector<Vertex> cycle;
};

struct ChordalityResult {
  // Reverse LexBFS ordering and its check.
  EliminationResult elimination;
  // Present exactly when the graph is not chordal.
  std::optional<HoleWitness> hole;

  bool chordal() const { return !hole.has_value(); }
};

// Maximal cliques, each sorted.
using CliqueList = std::vector<VertexList>;

// Lexicographic breadth-first search by partition refinement, O(n + m).
// Returns the visit order; among vertices with the largest label the one with
// the smallest identifier is visited first.
std::vector<Vertex> LexBfs(const Graph& g);

// Checks whether `ordering` is a perfect elimination ordering, i.e. the
// neighbors of every vertex that come later in the ordering are pairwise
// adjacent. Runs in O(n + m) by testing each vertex's later neighborhood only
// against its nearest later neighbor. Throws std::invalid_argument when
// `ordering` is not a permutation of the vertices.
EliminationResult CheckPeo(const Graph& g, std::span<const Vertex> ordering);

// Chordality test. On failure, a hole is reconstructed from the elimination
// failure (x, y, v): a shortest x-y path avoiding N[v] \ {x, y} closes an
// induced cycle through v.
ChordalityResult IsChordal(const Graph& g);

// Hole through the given failure locus, if the locus lies on one.
std::optional<HoleWitness> HoleThrough(const Graph& g,
                                       const EliminationFailure& locus);

// Maximal cliques of a chordal graph from a perfect elimination ordering: v
// together with its later neighbors, for every v whose set is not contained
// in the set of an earlier vertex. At most n cliques, listed in ordering
// order of their defining vertex. Throws std::invalid_argument if `peo` is
// not a perfect elimination ordering of g.
CliqueList MaximalCliquesChordal(const Graph& g, std::span<const Vertex> peo);

}  // namespace chordsplit

#endif  // CHORDSPLIT_CHORDAL_H_
