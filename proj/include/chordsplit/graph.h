#ifndef CHORDSPLIT_GRAPH_H_
#define CHORDSPLIT_GRAPH_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chordsplit/vertex_set.h"

namespace chordsplit {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on the vertices 0..n-1.
//
// Neighbors are kept as sorted lists in a compressed row layout. Graphs with
// at most kDenseLimit vertices additionally carry one adjacency bitset per
// vertex, which the pattern searches and oracles use for set algebra.
class Graph {
 public:
  static constexpr int kDenseLimit = 4096;

  Graph() : offsets_(1, 0) {}

  // Builds a graph from an edge list. Repeated and reversed pairs collapse to
  // one edge. Throws std::invalid_argument on an endpoint outside 0..n-1 or a
  // self-loop.
  static Graph FromEdges(int n, std::span<const Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }

  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  // Neighbors of v in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v],
            static_cast<size_t>(offsets_[v + 1] - offsets_[v])};
  }

  bool adjacent(Vertex u, Vertex v) const;

  bool has_bitsets() const { return !rows_.empty() || n_ == 0; }
  // Adjacency row of v. Only valid when has_bitsets().
  const VertexSet& row(Vertex v) const { return rows_[v]; }

  // N(v) as a set, for any graph size.
  VertexSet NeighborSet(Vertex v) const;
  // N[v].
  VertexSet ClosedNeighborSet(Vertex v) const;
  // N(U): vertices outside U with a neighbor in U.
  VertexSet Neighborhood(const VertexSet& set) const;

  bool IsClique(std::span<const Vertex> vertices) const;
  bool IsIndependent(std::span<const Vertex> vertices) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> Edges() const;

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph InducedSubgraph(std::span<const Vertex> vertices) const;

  VertexSet AllVertices() const { return VertexSet::Full(n_); }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && offsets_ == other.offsets_ &&
           targets_ == other.targets_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<int> offsets_;
  std::vector<Vertex> targets_;
  std::vector<VertexSet> rows_;
};

// Connected components of an induced subgraph g[source].
struct ComponentDecomposition {
  VertexSet source;
  // Each component sorted; components ordered by smallest member.
  std::vector<VertexList> components;

  size_t LargestSize() const;
};

ComponentDecomposition Components(const Graph& g, const VertexSet& subset);

// Minimum-hop path from s to t inside g[within], ties broken towards smaller
// vertex identifiers. Returns std::nullopt when s and t are disconnected.
// Throws std::invalid_argument if s or t lies outside `within`.
std::optional<std::vector<Vertex>> ShortestPath(const Graph& g,
                                                const VertexSet& within,
                                                Vertex s, Vertex t);

}  // namespace chordsplit

#endif  // CHORDSPLIT_GRAPH_H_
