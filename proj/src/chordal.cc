#include "chordsplit/chordal.h"

#include <algorithm>
#include <stdexcept>

namespace chordsplit {
namespace {

std::vector<int> Positions(const Graph& g, std::span<const Vertex> ordering) {
  const int n = g.num_vertices();
  if (static_cast<int>(ordering.size()) != n) {
    throw std::invalid_argument("ordering length differs from vertex count");
  }
  std::vector<int> pos(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = ordering[i];
    if (v < 0 || v >= n || pos[v] != -1) {
      throw std::invalid_argument("ordering is not a permutation of the vertices");
    }
    pos[v] = i;
  }
  return pos;
}

// Nearest later neighbor of each vertex, or -1.
std::vector<Vertex> EliminationParents(const Graph& g, const std::vector<int>& pos) {
  std::vector<Vertex> parent(static_cast<size_t>(g.num_vertices()), -1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && (parent[v] == -1 || pos[w] < pos[parent[v]])) {
        parent[v] = w;
      }
    }
  }
  return parent;
}

// Searches every vertex v for two non-adjacent neighbors joined through a
// component of G - N[v]. Used only when the elimination locus does not lie
// on a hole.
std::optional<HoleWitness> SearchAnyHole(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    VertexSet outside = g.ClosedNeighborSet(v).Complement();
    for (const VertexList& component : Components(g, outside).components) {
      VertexSet attach(g.num_vertices());
      for (Vertex c : component) {
        for (Vertex w : g.neighbors(c)) {
          if (w != v && g.adjacent(v, w)) attach.insert(w);
        }
      }
      VertexList touching = attach.ToList();
      for (size_t i = 0; i < touching.size(); ++i) {
        for (size_t j = i + 1; j < touching.size(); ++j) {
          if (!g.adjacent(touching[i], touching[j])) {
            auto hole = HoleThrough(g, {v, touching[i], touching[j]});
            if (hole) return hole;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Vertex> LexBfs(const Graph& g) {
  const int n = g.num_vertices();
  struct Class {
    Vertex head = -1, tail = -1;
    int prev = -1, next = -1;
    int stamp = -1;
    int split = -1;
  };
  std::vector<Class> classes;
  classes.reserve(static_cast<size_t>(n) + 1);
  std::vector<int> cls(static_cast<size_t>(n), 0);
  std::vector<Vertex> prev(static_cast<size_t>(n)), next(static_cast<size_t>(n));
  std::vector<char> visited(static_cast<size_t>(n), 0);
  int first_class = -1;

  if (n > 0) {
    classes.push_back({0, n - 1, -1, -1, -1, -1});
    first_class = 0;
    for (Vertex v = 0; v < n; ++v) {
      prev[v] = v - 1;
      next[v] = v + 1 < n ? v + 1 : -1;
    }
  }

  auto unlink_vertex = [&](Vertex v) {
    Class& c = classes[cls[v]];
    if (prev[v] != -1) next[prev[v]] = next[v]; else c.head = next[v];
    if (next[v] != -1) prev[next[v]] = prev[v]; else c.tail = prev[v];
    if (c.head == -1) {
      if (c.prev != -1) classes[c.prev].next = c.next; else first_class = c.next;
      if (c.next != -1) classes[c.next].prev = c.prev;
    }
  };

  std::vector<Vertex> order;
  order.reserve(static_cast<size_t>(n));
  for (int round = 0; round < n; ++round) {
    Vertex v = classes[first_class].head;
    unlink_vertex(v);
    visited[v] = 1;
    order.push_back(v);

    for (Vertex w : g.neighbors(v)) {
      if (visited[w]) continue;
      int old_id = cls[w];
      if (classes[old_id].stamp != round) {
        // New class directly in front of the old one.
        int id = static_cast<int>(classes.size());
        Class fresh;
        fresh.prev = classes[old_id].prev;
        fresh.next = old_id;
        classes.push_back(fresh);
        Class& old = classes[old_id];
        if (old.prev != -1) classes[old.prev].next = id; else first_class = id;
        old.prev = id;
        old.stamp = round;
        old.split = id;
      }
      int target = classes[old_id].split;
      unlink_vertex(w);
      Class& t = classes[target];
      cls[w] = target;
      prev[w] = t.tail;
      next[w] = -1;
      if (t.tail != -1) next[t.tail] = w; else t.head = w;
      t.tail = w;
    }
  }
  return order;
}

EliminationResult CheckPeo(const Graph& g, std::span<const Vertex> ordering) {
  std::vector<int> pos = Positions(g, ordering);
  std::vector<Vertex> parent = EliminationParents(g, pos);

  // For each vertex u, the later neighbors w of children v (parent[v] == u)
  // that must also be neighbors of u.
  struct Check {
    Vertex v, w;
  };
  std::vector<std::vector<Check>> pending(static_cast<size_t>(g.num_vertices()));
  for (Vertex v : ordering) {
    Vertex p = parent[v];
    if (p == -1) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w != p && pos[w] > pos[v]) pending[p].push_back({v, w});
    }
  }

  EliminationResult result{std::vector<Vertex>(ordering.begin(), ordering.end()),
                           std::nullopt};
  std::vector<int> mark(static_cast<size_t>(g.num_vertices()), -1);
  for (Vertex u : ordering) {
    if (pending[u].empty()) continue;
    for (Vertex w : g.neighbors(u)) mark[w] = u;
    for (const Check& c : pending[u]) {
      if (mark[c.w] != u) {
        result.failure = EliminationFailure{c.v, u, c.w};
        return result;
      }
    }
  }
  return result;
}

std::optional<HoleWitness> HoleThrough(const Graph& g,
                                       const EliminationFailure& locus) {
  VertexSet allowed = g.ClosedNeighborSet(locus.vertex).Complement();
  allowed.insert(locus.x);
  allowed.insert(locus.y);
  auto path = ShortestPath(g, allowed, locus.x, locus.y);
  if (!path) return std::nullopt;
  // A shortest path is induced, its interior avoids N[v], and x, y are
  // non-adjacent, so closing it through v gives a hole.
  HoleWitness hole;
  hole.cycle.push_back(locus.vertex);
  hole.cycle.insert(hole.cycle.end(), path->begin(), path->end());
  return hole;
}

ChordalityResult IsChordal(const Graph& g) {
  std::vector<Vertex> order = LexBfs(g);
  std::reverse(order.begin(), order.end());
  ChordalityResult result{CheckPeo(g, order), std::nullopt};
  if (result.elimination.failure) {
    result.hole = HoleThrough(g, *result.elimination.failure);
    if (!result.hole) result.hole = SearchAnyHole(g);
    if (!result.hole) {
      throw std::logic_error("elimination failed but no hole was found");
    }
  }
  return result;
}

CliqueList MaximalCliquesChordal(const Graph& g, std::span<const Vertex> peo) {
  if (!CheckPeo(g, peo).is_peo()) {
    throw std::invalid_argument("ordering is not a perfect elimination ordering");
  }
  const int n = g.num_vertices();
  std::vector<int> pos = Positions(g, peo);
  std::vector<Vertex> parent = EliminationParents(g, pos);
  std::vector<int> later(static_cast<size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) later[v] += pos[w] > pos[v] ? 1 : 0;
  }
  std::vector<char> dominated(static_cast<size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u) {
    if (parent[u] != -1 && later[u] == later[parent[u]] + 1) dominated[parent[u]] = 1;
  }

  CliqueList cliques;
  for (Vertex v : peo) {
    if (dominated[v]) continue;
    VertexList clique{v};
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v]) clique.push_back(w);
    }
    std::sort(clique.begin(), clique.end());
    cliques.push_back(std::move(clique));
  }
  return cliques;
}

}  // namespace chordsplit
