#include "chordsplit/oracle.h"

#include <algorithm>
#include <bit>
#include <random>

namespace chordsplit {
namespace {

using Mask = uint32_t;

struct SmallGraph {
  int n = 0;
  std::vector<Mask> adj;
};

SmallGraph ToSmall(const Graph& g, int limit) {
  if (g.num_vertices() > limit || g.num_vertices() > 32) {
    throw GuardExceeded("oracle limited to " + std::to_string(std::min(limit, 32)) +
                        " vertices, got " + std::to_string(g.num_vertices()));
  }
  SmallGraph s{g.num_vertices(), std::vector<Mask>(static_cast<size_t>(g.num_vertices()), 0)};
  for (Vertex v = 0; v < s.n; ++v) {
    for (Vertex w : g.neighbors(v)) s.adj[v] |= Mask{1} << w;
  }
  return s;
}

Mask Full(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Component of `start` inside `allowed`.
Mask Flood(const SmallGraph& s, Mask allowed, int start) {
  Mask reached = Mask{1} << start;
  Mask frontier = reached;
  while (frontier != 0) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask fresh = s.adj[v] & allowed & ~reached;
    reached |= fresh;
    frontier |= fresh;
  }
  return reached;
}

VertexList ToList(Mask m) {
  VertexList out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Calls visit(clique) for every clique, the empty one first, then in
// depth-first lexicographic order. Stops when visit returns true.
bool ForEachClique(const SmallGraph& s, Mask clique, Mask candidates,
                   const std::function<bool(Mask)>& visit) {
  if (visit(clique)) return true;
  while (candidates != 0) {
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (ForEachClique(s, clique | (Mask{1} << v), candidates & s.adj[v], visit)) return true;
  }
  return false;
}

bool Connected(const SmallGraph& s, Mask set) {
  return set != 0 && Flood(s, set, std::countr_zero(set)) == set;
}

}  // namespace

uint64_t LabeledGraphCount(int n) {
  if (n < 0 || n > 11) throw GuardExceeded("labeled graph count overflows for n > 11");
  return uint64_t{1} << (n * (n - 1) / 2);
}

Graph GraphFromEdgeMask(int n, uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (mask >> bit & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::FromEdges(n, edges);
}

void EnumerateLabeledGraphs(int n, const std::function<void(uint64_t, const Graph&)>& visit,
                            int limit) {
  if (n > limit) {
    throw GuardExceeded("exhaustive enumeration limited to n <= " + std::to_string(limit) +
                        ", got " + std::to_string(n));
  }
  const uint64_t count = LabeledGraphCount(n);
  for (uint64_t mask = 0; mask < count; ++mask) visit(mask, GraphFromEdgeMask(n, mask));
}

std::optional<GoodCliqueCertificate> OracleKGood(const Graph& g, int k, int limit) {
  const SmallGraph s = ToSmall(g, limit);
  std::optional<Mask> found;
  ForEachClique(s, 0, Full(s.n), [&](Mask clique) {
    Mask rest = Full(s.n) & ~clique;
    while (rest != 0) {
      Mask component = Flood(s, rest, std::countr_zero(rest));
      if (std::popcount(component) > k) return false;
      rest &= ~component;
    }
    found = clique;
    return true;
  });
  if (!found) return std::nullopt;
  VertexList clique = ToList(*found);
  VertexSet rest = g.AllVertices() - VertexSet(g.num_vertices(), clique);
  return GoodCliqueCertificate{k, std::move(clique), Components(g, rest)};
}

std::optional<APairWitness> OracleAPair(const Graph& g, int h, int limit) {
  if (h < 1) throw std::invalid_argument("A_h search needs h >= 1");
  const SmallGraph s = ToSmall(g, limit);
  if (2 * h > s.n) return std::nullopt;
  std::vector<Mask> connected;
  // Gosper's hack over all h-subsets in increasing order.
  for (uint64_t set = (uint64_t{1} << h) - 1; set < (uint64_t{1} << s.n);) {
    if (Connected(s, static_cast<Mask>(set))) connected.push_back(static_cast<Mask>(set));
    uint64_t low = set & (~set + 1);
    uint64_t ripple = set + low;
    set = (((ripple ^ set) >> 2) / low) | ripple;
  }
  for (size_t i = 0; i < connected.size(); ++i) {
    Mask closed = connected[i];
    for (int v : ToList(connected[i])) closed |= s.adj[v];
    for (size_t j = i + 1; j < connected.size(); ++j) {
      if ((connected[j] & closed) == 0) {
        return APairWitness{h, ToList(connected[i]), ToList(connected[j])};
      }
    }
  }
  return std::nullopt;
}

std::optional<SmePartition> OracleSme(const Graph& g, int limit) {
  const SmallGraph s = ToSmall(g, limit);
  std::optional<SmePartition> found;
  ForEachClique(s, 0, Full(s.n), [&](Mask clique) {
    SmePartition partition{ToList(clique), {}, {}};
    Mask rest = Full(s.n) & ~clique;
    while (rest != 0) {
      Mask component = Flood(s, rest, std::countr_zero(rest));
      rest &= ~component;
      const int size = std::popcount(component);
      if (size > 2) return false;
      VertexList members = ToList(component);
      if (size == 1) {
        partition.independent.push_back(members[0]);
        continue;
      }
      if ((s.adj[members[0]] & clique) != 0 && (s.adj[members[1]] & clique) != 0) return false;
      partition.matching.emplace_back(members[0], members[1]);
    }
    found = std::move(partition);
    return true;
  });
  return found;
}

std::vector<VertexList> OracleMaximalCliques(const Graph& g, int limit) {
  const SmallGraph s = ToSmall(g, limit);
  std::vector<VertexList> out;
  ForEachClique(s, 0, Full(s.n), [&](Mask clique) {
    if (clique == 0) return false;
    Mask common = Full(s.n) & ~clique;
    for (Mask rest = clique; rest != 0; rest &= rest - 1) common &= s.adj[std::countr_zero(rest)];
    if (common == 0) out.push_back(ToList(clique));
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool OracleHasHole(const Graph& g, int limit) {
  const SmallGraph s = ToSmall(g, limit);
  for (uint64_t set = 0; set < (uint64_t{1} << s.n); ++set) {
    Mask m = static_cast<Mask>(set);
    if (std::popcount(m) < 4) continue;
    bool two_regular = true;
    for (Mask rest = m; rest != 0 && two_regular; rest &= rest - 1) {
      two_regular = std::popcount(s.adj[std::countr_zero(rest)] & m) == 2;
    }
    if (two_regular && Connected(s, m)) return true;
  }
  return false;
}

bool OracleContains(const Graph& g, const Graph& pattern, int limit) {
  const SmallGraph s = ToSmall(g, limit);
  const SmallGraph p = ToSmall(pattern, limit);
  std::vector<int> map(static_cast<size_t>(p.n), -1);
  std::function<bool(int, Mask)> place = [&](int i, Mask used) {
    if (i == p.n) return true;
    for (int c = 0; c < s.n; ++c) {
      if (used >> c & 1U) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        ok = ((s.adj[c] >> map[j]) & 1U) == ((p.adj[i] >> j) & 1U);
      }
      if (!ok) continue;
      map[i] = c;
      if (place(i + 1, used | (Mask{1} << c))) return true;
    }
    return false;
  };
  return place(0, 0);
}

Graph RandomChordal(int n, double density, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Edge> edges;
  if (n > 0) cliques.push_back({0});
  std::vector<Vertex> chosen;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<size_t> pick_clique(0, cliques.size() - 1);
    const size_t index = pick_clique(rng);
    const std::vector<Vertex>& base = cliques[index];
    chosen.clear();
    for (Vertex u : base) {
      if (coin(rng) < density) chosen.push_back(u);
    }
    if (chosen.empty()) {
      std::uniform_int_distribution<size_t> pick_member(0, base.size() - 1);
      chosen.push_back(base[pick_member(rng)]);
    }
    for (Vertex u : chosen) edges.emplace_back(u, v);
    if (chosen.size() == base.size()) {
      cliques[index].push_back(v);
    } else {
      chosen.push_back(v);
      cliques.push_back(chosen);
    }
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace chordsplit
