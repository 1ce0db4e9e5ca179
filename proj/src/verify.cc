#include "chordsplit/verify.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace chordsplit {
namespace {

std::string Str(Vertex v) { return std::to_string(v); }

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(int a, int b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<int> parent_;
};

// Components of g minus `removed`, as a set of sorted lists.
std::set<VertexList> ComponentsAvoiding(const Graph& g, const std::vector<char>& removed) {
  const int n = g.num_vertices();
  DisjointSets sets(n);
  for (Vertex u = 0; u < n; ++u) {
    if (removed[u]) continue;
    for (Vertex w : g.neighbors(u)) {
      if (!removed[w]) sets.Union(u, w);
    }
  }
  std::vector<VertexList> by_root(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) by_root[sets.Find(v)].push_back(v);
  }
  std::set<VertexList> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.insert(std::move(c));
  }
  return out;
}

Verdict CheckVertices(const Graph& g, const VertexList& vertices, const char* what) {
  std::vector<char> seen(static_cast<size_t>(g.num_vertices()), 0);
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.num_vertices()) {
      return Verdict::Fail(std::string(what) + ": vertex " + Str(v) + " out of range");
    }
    if (seen[v]) return Verdict::Fail(std::string(what) + ": vertex " + Str(v) + " repeated");
    seen[v] = 1;
  }
  return Verdict::Pass();
}

Verdict CheckClique(const Graph& g, const VertexList& clique) {
  if (auto v = CheckVertices(g, clique, "clique"); !v) return v;
  for (size_t i = 0; i < clique.size(); ++i) {
    for (size_t j = i + 1; j < clique.size(); ++j) {
      if (!g.adjacent(clique[i], clique[j])) {
        return Verdict::Fail("clique members " + Str(clique[i]) + " and " +
                             Str(clique[j]) + " are not adjacent");
      }
    }
  }
  return Verdict::Pass();
}

bool Connected(const Graph& g, const VertexList& set) {
  if (set.empty()) return false;
  std::vector<char> in(static_cast<size_t>(g.num_vertices()), 0);
  for (Vertex v : set) in[v] = 1;
  std::vector<Vertex> stack{set.front()};
  in[set.front()] = 2;
  size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (in[w] == 1) {
        in[w] = 2;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == set.size();
}

// Brute-force class membership for graphs of at most 16 vertices, used to
// decide whether a fixed pattern certifies non-membership.
bool SmallGraphInClass(const Graph& p, const GraphClass& cls) {
  const int n = p.num_vertices();
  auto induced_cycle = [&](uint32_t mask) {
    int count = std::popcount(mask);
    if (count < 4) return false;
    VertexList members;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1U) members.push_back(v);
    }
    for (Vertex v : members) {
      int deg = 0;
      for (Vertex w : members) deg += p.adjacent(v, w) ? 1 : 0;
      if (deg != 2) return false;
    }
    return Connected(p, members);
  };
  for (uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (induced_cycle(mask)) return false;
  }
  if (cls.kind == GraphClass::Kind::kChordal) return true;

  const int bound = cls.kind == GraphClass::Kind::kGoodClique ? cls.k
                    : cls.kind == GraphClass::Kind::kSplit    ? 1
                                                              : 2;
  for (uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<char> removed(static_cast<size_t>(n), 0);
    VertexList clique;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1U) {
        removed[v] = 1;
        clique.push_back(v);
      }
    }
    if (!p.IsClique(clique)) continue;
    bool good = true;
    for (const VertexList& c : ComponentsAvoiding(p, removed)) {
      if (static_cast<int>(c.size()) > bound) good = false;
      if (good && cls.kind == GraphClass::Kind::kSme && c.size() == 2) {
        int touching = 0;
        for (Vertex v : c) {
          for (Vertex q : clique) {
            if (p.adjacent(v, q)) {
              ++touching;
              break;
            }
          }
        }
        if (touching == 2) good = false;
      }
    }
    if (good) return true;
  }
  return false;
}

}  // namespace

Verdict VerifyGoodClique(const Graph& g, const GoodCliqueCertificate& cert) {
  if (cert.k < 0) return Verdict::Fail("negative k");
  if (auto v = CheckClique(g, cert.clique); !v) return v;
  std::vector<char> removed(static_cast<size_t>(g.num_vertices()), 0);
  for (Vertex q : cert.clique) removed[q] = 1;
  std::set<VertexList> actual = ComponentsAvoiding(g, removed);
  for (const VertexList& c : actual) {
    if (static_cast<int>(c.size()) > cert.k) {
      std::string list;
      for (Vertex v : c) list += (list.empty() ? "" : ",") + Str(v);
      return Verdict::Fail("component {" + list + "} has size " + std::to_string(c.size()) +
                           " > k = " + std::to_string(cert.k));
    }
  }
  std::set<VertexList> claimed;
  for (VertexList c : cert.decomposition.components) {
    std::sort(c.begin(), c.end());
    claimed.insert(std::move(c));
  }
  if (claimed != actual) {
    return Verdict::Fail("listed components differ from the components of g - Q");
  }
  if (cert.decomposition.source.universe() != g.num_vertices()) {
    return Verdict::Fail("decomposition source has the wrong universe");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (cert.decomposition.source.contains(v) == static_cast<bool>(removed[v])) {
      return Verdict::Fail("decomposition source is not V \\ Q");
    }
  }
  return Verdict::Pass();
}

Verdict VerifySplitPartition(const Graph& g, const SplitPartition& partition) {
  if (auto v = CheckClique(g, partition.clique); !v) return v;
  VertexList all = partition.clique;
  all.insert(all.end(), partition.independent.begin(), partition.independent.end());
  if (auto v = CheckVertices(g, all, "partition"); !v) return v;
  if (static_cast<int>(all.size()) != g.num_vertices()) {
    return Verdict::Fail("clique and independent set do not cover V");
  }
  const auto& s = partition.independent;
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) {
        return Verdict::Fail("independent vertices " + Str(s[i]) + " and " + Str(s[j]) +
                             " are adjacent");
      }
    }
  }
  return Verdict::Pass();
}

Verdict VerifySmePartition(const Graph& g, const SmePartition& partition) {
  if (auto v = CheckClique(g, partition.clique); !v) return v;
  const int n = g.num_vertices();
  // 0 unassigned, 1 clique, 2 independent, 3 matched.
  std::vector<int> role(static_cast<size_t>(n), 0);
  std::vector<int> edge_of(static_cast<size_t>(n), -1);
  auto claim = [&](Vertex v, int r) {
    if (v < 0 || v >= n) return Verdict::Fail("vertex " + Str(v) + " out of range");
    if (role[v] != 0) return Verdict::Fail("vertex " + Str(v) + " assigned twice");
    role[v] = r;
    return Verdict::Pass();
  };
  for (Vertex q : partition.clique) {
    if (auto v = claim(q, 1); !v) return v;
  }
  for (Vertex s : partition.independent) {
    if (auto v = claim(s, 2); !v) return v;
  }
  for (size_t i = 0; i < partition.matching.size(); ++i) {
    auto [x, y] = partition.matching[i];
    if (auto v = claim(x, 3); !v) return v;
    if (auto v = claim(y, 3); !v) return v;
    if (!g.adjacent(x, y)) {
      return Verdict::Fail("matching pair " + Str(x) + "-" + Str(y) + " is not an edge");
    }
    edge_of[x] = edge_of[y] = static_cast<int>(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (role[v] == 0) return Verdict::Fail("vertex " + Str(v) + " not assigned");
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) {
      if (w < u) continue;
      if (role[u] == 2 && role[w] == 2) {
        return Verdict::Fail("independent vertices " + Str(u) + " and " + Str(w) +
                             " are adjacent");
      }
      if ((role[u] == 2 && role[w] == 3) || (role[u] == 3 && role[w] == 2)) {
        return Verdict::Fail("independent vertex adjacent to matched vertex (" + Str(u) +
                             "-" + Str(w) + ")");
      }
      if (role[u] == 3 && role[w] == 3 && edge_of[u] != edge_of[w]) {
        return Verdict::Fail("matching is not induced (" + Str(u) + "-" + Str(w) + ")");
      }
    }
  }
  for (auto [x, y] : partition.matching) {
    auto sees_clique = [&](Vertex v) {
      for (Vertex w : g.neighbors(v)) {
        if (role[w] == 1) return true;
      }
      return false;
    };
    if (sees_clique(x) && sees_clique(y)) {
      return Verdict::Fail("both endpoints of matching edge " + Str(x) + "-" + Str(y) +
                           " have neighbors in the clique");
    }
  }
  return Verdict::Pass();
}

Verdict VerifyPeo(const Graph& g, const std::vector<Vertex>& ordering) {
  if (static_cast<int>(ordering.size()) != g.num_vertices()) {
    return Verdict::Fail("ordering length differs from vertex count");
  }
  if (auto v = CheckVertices(g, ordering, "ordering"); !v) return v;
  std::vector<int> pos(ordering.size());
  for (size_t i = 0; i < ordering.size(); ++i) pos[ordering[i]] = static_cast<int>(i);
  for (Vertex v : ordering) {
    VertexList later;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    for (size_t i = 0; i < later.size(); ++i) {
      for (size_t j = i + 1; j < later.size(); ++j) {
        if (!g.adjacent(later[i], later[j])) {
          return Verdict::Fail("later neighbors " + Str(later[i]) + " and " + Str(later[j]) +
                               " of " + Str(v) + " are not adjacent");
        }
      }
    }
  }
  return Verdict::Pass();
}

Verdict VerifyHole(const Graph& g, const HoleWitness& hole) {
  const auto& c = hole.cycle;
  if (c.size() < 4) return Verdict::Fail("hole has fewer than four vertices");
  if (auto v = CheckVertices(g, c, "hole"); !v) return v;
  const size_t len = c.size();
  for (size_t i = 0; i < len; ++i) {
    for (size_t j = i + 1; j < len; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(c[i], c[j]) != consecutive) {
        return Verdict::Fail(consecutive ? "hole misses cycle edge " + Str(c[i]) + "-" + Str(c[j])
                                         : "hole has chord " + Str(c[i]) + "-" + Str(c[j]));
      }
    }
  }
  return Verdict::Pass();
}

Verdict VerifyEmbedding(const Graph& g, const Embedding& embedding) {
  const Pattern* p = FindPattern(embedding.pattern);
  if (p == nullptr) return Verdict::Fail("unknown pattern '" + embedding.pattern + "'");
  if (static_cast<int>(embedding.map.size()) != p->size()) {
    return Verdict::Fail("embedding size differs from pattern size");
  }
  if (auto v = CheckVertices(g, embedding.map, "embedding"); !v) return v;
  for (int i = 0; i < p->size(); ++i) {
    for (int j = i + 1; j < p->size(); ++j) {
      if (g.adjacent(embedding.map[i], embedding.map[j]) != p->graph.adjacent(i, j)) {
        return Verdict::Fail("embedding is not induced at pattern pair (" + Str(i) + ", " +
                             Str(j) + ")");
      }
    }
  }
  return Verdict::Pass();
}

Verdict VerifyAPair(const Graph& g, const APairWitness& pair) {
  if (pair.h < 1) return Verdict::Fail("A-pair parameter below 1");
  if (static_cast<int>(pair.x.size()) != pair.h || static_cast<int>(pair.y.size()) != pair.h) {
    return Verdict::Fail("A-pair sets must both have h vertices");
  }
  VertexList both = pair.x;
  both.insert(both.end(), pair.y.begin(), pair.y.end());
  if (auto v = CheckVertices(g, both, "A-pair"); !v) return v;
  if (!Connected(g, pair.x) || !Connected(g, pair.y)) {
    return Verdict::Fail("A-pair set does not induce a connected subgraph");
  }
  for (Vertex a : pair.x) {
    for (Vertex b : pair.y) {
      if (g.adjacent(a, b)) {
        return Verdict::Fail("A-pair sets are joined by edge " + Str(a) + "-" + Str(b));
      }
    }
  }
  return Verdict::Pass();
}

Verdict VerifyWitness(const Graph& g, const RejectionWitness& witness) {
  return std::visit(
      [&](const auto& w) -> Verdict {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, HoleWitness>) return VerifyHole(g, w);
        if constexpr (std::is_same_v<T, Embedding>) return VerifyEmbedding(g, w);
        if constexpr (std::is_same_v<T, APairWitness>) return VerifyAPair(g, w);
      },
      witness);
}

Verdict VerifyRejection(const Graph& g, const RejectionWitness& witness,
                        const GraphClass& cls) {
  if (auto v = VerifyWitness(g, witness); !v) return v;
  if (std::holds_alternative<HoleWitness>(witness)) return Verdict::Pass();
  if (const auto* pair = std::get_if<APairWitness>(&witness)) {
    int needed = 0;
    switch (cls.kind) {
      case GraphClass::Kind::kChordal:
        return Verdict::Fail("an A-pair does not certify non-chordality");
      case GraphClass::Kind::kSplit: needed = 2; break;
      case GraphClass::Kind::kGoodClique: needed = cls.k + 1; break;
      case GraphClass::Kind::kSme: needed = 3; break;
    }
    if (pair->h < needed) {
      return Verdict::Fail("A-pair parameter " + std::to_string(pair->h) +
                           " too small to reject " + cls.Name());
    }
    return Verdict::Pass();
  }
  const auto& embedding = std::get<Embedding>(witness);
  if (SmallGraphInClass(FindPattern(embedding.pattern)->graph, cls)) {
    return Verdict::Fail("pattern " + embedding.pattern + " is itself in class " + cls.Name());
  }
  return Verdict::Pass();
}

}  // namespace chordsplit
