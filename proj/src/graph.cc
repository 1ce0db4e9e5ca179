#include "chordsplit/graph.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chordsplit {

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::vector<Vertex>> adjacency(static_cast<size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + ", " + std::to_string(v) +
                                  ") with n = " + std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<int>(list.size());
  }
  g.targets_.reserve(static_cast<size_t>(g.offsets_[n]));
  for (const auto& list : adjacency) {
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  }
  g.m_ = g.offsets_[n] / 2;

  if (n <= kDenseLimit) {
    g.rows_.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) g.rows_.emplace_back(n, g.neighbors(v));
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!rows_.empty()) return rows_[u].contains(v);
  auto list = degree(u) <= degree(v) ? neighbors(u) : neighbors(v);
  Vertex other = degree(u) <= degree(v) ? v : u;
  return std::binary_search(list.begin(), list.end(), other);
}

VertexSet Graph::NeighborSet(Vertex v) const {
  if (!rows_.empty()) return rows_[v];
  return VertexSet(n_, neighbors(v));
}

VertexSet Graph::ClosedNeighborSet(Vertex v) const {
  VertexSet s = NeighborSet(v);
  s.insert(v);
  return s;
}

VertexSet Graph::Neighborhood(const VertexSet& set) const {
  VertexSet out(n_);
  set.ForEach([&](Vertex u) {
    for (Vertex w : neighbors(u)) out.insert(w);
  });
  return out - set;
}

bool Graph::IsClique(std::span<const Vertex> vertices) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (!adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool Graph::IsIndependent(std::span<const Vertex> vertices) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::InducedSubgraph(std::span<const Vertex> vertices) const {
  std::vector<int> index(static_cast<size_t>(n_), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : neighbors(vertices[i])) {
      int j = index[w];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return FromEdges(static_cast<int>(vertices.size()), edges);
}

size_t ComponentDecomposition::LargestSize() const {
  size_t best = 0;
  for (const auto& c : components) best = std::max(best, c.size());
  return best;
}

ComponentDecomposition Components(const Graph& g, const VertexSet& subset) {
  ComponentDecomposition out{subset, {}};
  VertexSet unseen = subset;
  std::vector<Vertex> queue;
  for (Vertex root = unseen.first(); root != -1; root = unseen.next(root)) {
    if (!unseen.contains(root)) continue;
    queue.assign(1, root);
    unseen.erase(root);
    for (size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (unseen.contains(w)) {
          unseen.erase(w);
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.components.push_back(queue);
  }
  return out;
}

std::optional<std::vector<Vertex>> ShortestPath(const Graph& g,
                                                const VertexSet& within,
                                                Vertex s, Vertex t) {
  if (!within.contains(s) || !within.contains(t)) {
    throw std::invalid_argument("path endpoint outside the allowed vertex set");
  }
  std::vector<Vertex> parent(static_cast<size_t>(g.num_vertices()), -1);
  parent[s] = s;
  std::vector<Vertex> queue{s};
  for (size_t head = 0; head < queue.size() && parent[t] == -1; ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] == -1 && within.contains(w)) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (parent[t] == -1) return std::nullopt;
  std::vector<Vertex> path{t};
  while (path.back() != s) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace chordsplit
