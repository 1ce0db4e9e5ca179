#include "chordsplit/recognizers.h"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "chordsplit/verify.h"

namespace chordsplit {
namespace {

VertexList Sorted(VertexList v) {
  std::sort(v.begin(), v.end());
  return v;
}

GoodCliqueCertificate MakeCertificate(const Graph& g, int k, VertexList clique) {
  VertexSet rest = g.AllVertices() - VertexSet(g.num_vertices(), clique);
  return GoodCliqueCertificate{k, std::move(clique), Components(g, rest)};
}

// Maximum clique among the maximal cliques, ties towards the lexicographically
// smallest member list.
VertexList LargestClique(const CliqueList& cliques) {
  const VertexList* best = nullptr;
  for (const auto& c : cliques) {
    if (best == nullptr || c.size() > best->size() ||
        (c.size() == best->size() && c < *best)) {
      best = &c;
    }
  }
  return best == nullptr ? VertexList{} : *best;
}

// Hole of length at least 8 re-expressed as an induced 2P3 on its first
// seven vertices; shorter holes are returned as they are.
RejectionWitness SmeHoleWitness(const HoleWitness& hole) {
  const auto& c = hole.cycle;
  if (c.size() < 8) return hole;
  return Embedding{"2p3", {c[0], c[1], c[2], c[4], c[5], c[6]}};
}

[[noreturn]] void Unverified(const std::string& what, const Verdict& verdict) {
  throw std::logic_error(what + " failed verification: " + verdict.reason);
}

// Component sizes of g - Q for a batch of cliques Q per pass over the
// elimination ordering, one lane per clique. Sizes saturate at the largest
// value of Count, which must exceed k.
struct CliqueScan {
  int n;
  const std::vector<int>& later_begin;
  const std::vector<int>& later;
  const std::vector<int>& parent;
  const std::vector<int>& pos;
  const CliqueList& cliques;

  template <typename Count>
  std::optional<size_t> FirstGood(int k) const {
    constexpr int kLanes = 64 / sizeof(Count);
    auto add = [](Count a, Count b) {
      const Count sum = static_cast<Count>(a + b);
      return sum < a ? std::numeric_limits<Count>::max() : sum;
    };
    std::vector<uint64_t> lanes_of(static_cast<size_t>(n), 0);
    std::vector<Count> carried(static_cast<size_t>(n) * kLanes, 0);
    for (size_t base = 0; base < cliques.size(); base += kLanes) {
      const int used = static_cast<int>(std::min<size_t>(kLanes, cliques.size() - base));
      for (int l = 0; l < used; ++l) {
        for (Vertex q : cliques[base + l]) lanes_of[pos[q]] |= uint64_t{1} << l;
      }
      Count largest[kLanes] = {};
      for (int i = 0; i < n; ++i) {
        Count* row = &carried[static_cast<size_t>(i) * kLanes];
        const uint64_t here = lanes_of[i];
        const int p = parent[i];
        if (here == 0 && (p < 0 || lanes_of[p] == 0)) {
          if (p < 0) {
            for (int l = 0; l < kLanes; ++l) largest[l] = std::max(largest[l], add(row[l], Count{1}));
          } else {
            Count* up = &carried[static_cast<size_t>(p) * kLanes];
            for (int l = 0; l < kLanes; ++l) up[l] = add(up[l], add(row[l], Count{1}));
          }
          for (int l = 0; l < kLanes; ++l) row[l] = 0;
          continue;
        }
        for (int l = 0; l < kLanes; ++l) {
          const uint64_t bit = uint64_t{1} << l;
          if (here & bit) continue;
          const Count size = add(row[l], Count{1});
          row[l] = 0;
          int target = -1;
          for (int e = later_begin[i]; e < later_begin[i + 1]; ++e) {
            if (!(lanes_of[later[e]] & bit)) {
              target = later[e];
              break;
            }
          }
          if (target < 0) {
            largest[l] = std::max(largest[l], size);
          } else {
            Count& slot = carried[static_cast<size_t>(target) * kLanes + l];
            slot = add(slot, size);
          }
        }
      }
      for (int l = 0; l < used; ++l) {
        for (Vertex q : cliques[base + l]) lanes_of[pos[q]] = 0;
      }
      for (int l = 0; l < used; ++l) {
        if (static_cast<int64_t>(largest[l]) <= k) return base + l;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

UniversalVertexDiagnosis DiagnoseUniversalVertex(const Graph& g, const VertexList& clique,
                                                 const VertexList& component) {
  const int n = g.num_vertices();
  if (!g.IsClique(clique)) return {"the given set is not a clique", std::nullopt};
  if (component.empty()) return {"the component is empty", std::nullopt};
  VertexSet in_clique(n, clique);
  VertexSet in_component(n, component);
  if (in_clique.Intersects(in_component)) {
    return {"the component meets the clique", std::nullopt};
  }
  if (Components(g, in_component).components.size() != 1) {
    return {"the component is not connected", std::nullopt};
  }
  if (!g.Neighborhood(in_component).IsSubsetOf(in_clique)) {
    return {"the component is not a full component of g - Q", std::nullopt};
  }
  for (Vertex q : clique) {
    if (!g.NeighborSet(q).Intersects(in_component)) {
      return {"clique vertex " + std::to_string(q) + " has no neighbor in the component",
              std::nullopt};
    }
  }
  if (clique.empty()) return {};

  // x sees q_1..q_{i-1}; extend to q_i through the neighbor y of q_i in the
  // component closest to x.
  Vertex x = (g.NeighborSet(clique[0]) & in_component).first();
  for (size_t i = 1; i < clique.size(); ++i) {
    const Vertex qi = clique[i];
    if (g.adjacent(x, qi)) continue;
    std::vector<Vertex> parent(static_cast<size_t>(n), -1);
    std::vector<Vertex> queue{x};
    parent[x] = x;
    Vertex y = -1;
    for (size_t head = 0; head < queue.size() && y == -1; ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!in_component.contains(w) || parent[w] != -1) continue;
        parent[w] = queue[head];
        if (g.adjacent(w, qi)) {
          y = w;
          break;
        }
        queue.push_back(w);
      }
    }
    std::vector<Vertex> path{y};
    while (path.back() != x) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());

    for (size_t j = 0; j < i; ++j) {
      const Vertex qj = clique[j];
      if (g.adjacent(y, qj)) continue;
      size_t last = 0;
      for (size_t p = 0; p + 1 < path.size(); ++p) {
        if (g.adjacent(path[p], qj)) last = p;
      }
      HoleWitness hole;
      hole.cycle.push_back(qj);
      for (size_t p = last; p < path.size(); ++p) hole.cycle.push_back(path[p]);
      hole.cycle.push_back(qi);
      return {"the graph is not chordal", std::move(hole)};
    }
    x = y;
  }
  return {};
}

Vertex FindUniversalVertex(const Graph& g, const VertexList& clique,
                           const VertexList& component) {
  for (Vertex z : component) {
    bool universal = true;
    for (Vertex q : clique) {
      if (!g.adjacent(z, q)) {
        universal = false;
        break;
      }
    }
    if (universal) return z;
  }
  UniversalVertexDiagnosis diagnosis = DiagnoseUniversalVertex(g, clique, component);
  if (diagnosis.violation.empty()) {
    diagnosis.violation = "no universal vertex found although all preconditions hold";
  }
  throw PreconditionViolation("universal vertex scan failed: " + diagnosis.violation,
                              std::move(diagnosis.hole));
}

std::optional<GoodCliqueCertificate> FindKGoodScan(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = g.num_vertices();
  ChordalityResult chordality = IsChordal(g);
  if (!chordality.chordal()) {
    throw std::invalid_argument("k-good clique scan requires a chordal graph");
  }
  if (n == 0) return MakeCertificate(g, k, {});
  const std::vector<Vertex>& peo = chordality.elimination.ordering;
  CliqueList cliques = MaximalCliquesChordal(g, peo);

  // Work in elimination positions. In a chordal graph minus any vertex set,
  // each vertex and its nearest remaining later neighbor share a component,
  // and these links span every component, so component sizes accumulate
  // along one pass over the ordering. The pass runs for kLanes cliques at
  // once; vertices away from all of them take the same link in every lane.
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  std::vector<int> later_begin(static_cast<size_t>(n) + 1, 0);
  std::vector<int> later;
  later.reserve(static_cast<size_t>(g.num_edges()));
  for (int i = 0; i < n; ++i) {
    size_t start = later.size();
    for (Vertex w : g.neighbors(peo[i])) {
      if (pos[w] > i) later.push_back(pos[w]);
    }
    std::sort(later.begin() + static_cast<std::ptrdiff_t>(start), later.end());
    later_begin[i + 1] = static_cast<int>(later.size());
  }
  std::vector<int> parent(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    parent[i] = later_begin[i] < later_begin[i + 1] ? later[later_begin[i]] : -1;
  }

  const CliqueScan scan{n, later_begin, later, parent, pos, cliques};
  std::optional<size_t> found;
  if (k < 255) {
    found = scan.FirstGood<uint8_t>(k);
  } else if (k < 65535) {
    found = scan.FirstGood<uint16_t>(k);
  } else {
    found = scan.FirstGood<uint32_t>(k);
  }
  if (!found) return std::nullopt;
  GoodCliqueCertificate cert = MakeCertificate(g, k, cliques[*found]);
  if (Verdict v = VerifyGoodClique(g, cert); !v) Unverified("k-good scan certificate", v);
  return cert;
}

CertifiedResult FindKGoodCertified(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = g.num_vertices();
  CertifiedResult result{RejectionWitness{}, {}};

  auto finish_witness = [&](RejectionWitness w) {
    if (Verdict v = VerifyRejection(g, w, GraphClass::GoodClique(k)); !v) {
      Unverified("k-good rejection witness", v);
    }
    result.outcome = std::move(w);
    return result;
  };

  ChordalityResult chordality = IsChordal(g);
  if (!chordality.chordal()) return finish_witness(*chordality.hole);

  VertexList clique = LargestClique(MaximalCliquesChordal(g, chordality.elimination.ordering));
  const VertexSet all = g.AllVertices();
  for (int round = 0; round <= n; ++round) {
    VertexSet in_clique(n, clique);
    ComponentDecomposition decomposition = Components(g, all - in_clique);
    std::vector<const VertexList*> large;
    for (const auto& c : decomposition.components) {
      if (static_cast<int>(c.size()) > k) large.push_back(&c);
    }
    if (large.empty()) {
      GoodCliqueCertificate cert{k, clique, std::move(decomposition)};
      if (Verdict v = VerifyGoodClique(g, cert); !v) Unverified("k-good certificate", v);
      result.outcome = std::move(cert);
      return result;
    }
    if (large.size() >= 2) {
      return finish_witness(APairWitness{k + 1, GrowConnectedSubset(g, *large[0], k + 1),
                                         GrowConnectedSubset(g, *large[1], k + 1)});
    }

    const VertexList& nontrivial = *large[0];
    VertexSet in_nontrivial(n, nontrivial);
    VertexList contact;
    for (Vertex q : clique) {
      if (g.NeighborSet(q).Intersects(in_nontrivial)) contact.push_back(q);
    }
    VertexSet remainder = all - in_nontrivial - VertexSet(n, contact);
    for (const auto& c : Components(g, remainder).components) {
      if (static_cast<int>(c.size()) > k) {
        VertexList a = GrowConnectedSubset(g, nontrivial, k + 1);
        VertexList b = GrowConnectedSubset(g, c, k + 1);
        if (b < a) std::swap(a, b);
        return finish_witness(APairWitness{k + 1, std::move(a), std::move(b)});
      }
    }

    Vertex z = FindUniversalVertex(g, contact, nontrivial);
    result.trace.push_back({static_cast<int>(clique.size()),
                            static_cast<int>(nontrivial.size()),
                            static_cast<int>(contact.size()), z});
    contact.push_back(z);
    clique = Sorted(std::move(contact));
  }
  throw std::logic_error("certified k-good search did not terminate within n rounds");
}

SplitResult RecognizeSplit(const Graph& g) {
  CertifiedResult certified = FindKGoodCertified(g, 1);
  if (!certified.accepted()) return std::get<RejectionWitness>(certified.outcome);
  const auto& cert = std::get<GoodCliqueCertificate>(certified.outcome);
  SplitPartition partition{cert.clique, {}};
  for (const auto& c : cert.decomposition.components) partition.independent.push_back(c[0]);
  std::sort(partition.independent.begin(), partition.independent.end());
  return partition;
}

namespace {

// The definition check for one clique.
std::optional<SmePartition> SmeFromClique(const Graph& g, const VertexList& clique) {
  const int n = g.num_vertices();
  VertexSet in_clique(n, clique);
  SmePartition partition{clique, {}, {}};
  for (const auto& c : Components(g, g.AllVertices() - in_clique).components) {
    if (c.size() > 2) return std::nullopt;
    if (c.size() == 1) {
      partition.independent.push_back(c[0]);
      continue;
    }
    bool x_sees = g.NeighborSet(c[0]).Intersects(in_clique);
    bool y_sees = g.NeighborSet(c[1]).Intersects(in_clique);
    if (x_sees && y_sees) return std::nullopt;
    partition.matching.emplace_back(c[0], c[1]);
  }
  return partition;
}

}  // namespace

SmeResult RecognizeSme(const Graph& g) {
  auto finish_witness = [&](RejectionWitness w) -> SmeResult {
    if (Verdict v = VerifyRejection(g, w, GraphClass::Sme()); !v) {
      Unverified("split-matching-extended witness", v);
    }
    return w;
  };

  ChordalityResult chordality = IsChordal(g);
  if (!chordality.chordal()) return finish_witness(SmeHoleWitness(*chordality.hole));
  if (g.num_vertices() == 0) return SmePartition{};

  for (const VertexList& clique : MaximalCliquesChordal(g, chordality.elimination.ordering)) {
    if (auto partition = SmeFromClique(g, clique)) {
      if (Verdict v = VerifySmePartition(g, *partition); !v) {
        Unverified("split-matching-extended partition", v);
      }
      return *std::move(partition);
    }
  }
  for (std::string_view name : SmeFixedPatternNames()) {
    if (auto embedding = FindInduced(g, *FindPattern(name))) {
      return finish_witness(*std::move(embedding));
    }
  }
  throw std::logic_error(
      "chordal graph has neither a split-matching-extended partition nor a forbidden "
      "pattern");
}

std::optional<VertexList> SplitByDegrees(const Graph& g, const std::vector<char>& keep) {
  const int n = g.num_vertices();
  std::vector<int> degree(static_cast<size_t>(n), 0);
  int max_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    for (Vertex w : g.neighbors(v)) degree[v] += keep[w] ? 1 : 0;
    max_degree = std::max(max_degree, degree[v]);
  }
  // Counting sort: decreasing degree, increasing identifier.
  std::vector<std::vector<Vertex>> buckets(static_cast<size_t>(max_degree) + 1);
  for (Vertex v = 0; v < n; ++v) {
    if (keep[v]) buckets[degree[v]].push_back(v);
  }
  std::vector<Vertex> order;
  for (int d = max_degree; d >= 0; --d) {
    order.insert(order.end(), buckets[d].begin(), buckets[d].end());
  }
  // Largest c with d_c >= c - 1 (1-based); split iff the top c degrees sum
  // to c(c - 1) plus the remaining degrees.
  int64_t c = 0;
  while (c < static_cast<int64_t>(order.size()) && degree[order[c]] >= c) ++c;
  int64_t top = 0, bottom = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    (static_cast<int64_t>(i) < c ? top : bottom) += degree[order[i]];
  }
  if (top != c * (c - 1) + bottom) return std::nullopt;
  VertexList clique(order.begin(), order.begin() + c);
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::optional<SmePartition> RecognizeSmeLinear(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> keep(static_cast<size_t>(n), 1);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) keep[v] = 0;
  }
  // Removing leaves from a split-matching-extended graph leaves a split
  // graph, so a non-split remainder is a rejection.
  std::optional<VertexList> clique = SplitByDegrees(g, keep);
  if (!clique) return std::nullopt;

  std::vector<char> in_clique(static_cast<size_t>(n), 0);
  for (Vertex q : *clique) in_clique[q] = 1;
  std::vector<char> matched(static_cast<size_t>(n), 0);
  SmePartition partition{*clique, {}, {}};
  bool consistent = true;
  for (Vertex y = 0; y < n && consistent; ++y) {
    if (keep[y]) continue;
    Vertex x = g.neighbors(y)[0];
    if (!keep[x]) {
      if (x > y) partition.matching.emplace_back(y, x);
    } else if (in_clique[x]) {
      partition.independent.push_back(y);
    } else if (matched[x]) {
      consistent = false;
    } else {
      matched[x] = 1;
      partition.matching.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (keep[v] && !in_clique[v] && !matched[v]) partition.independent.push_back(v);
  }
  std::sort(partition.independent.begin(), partition.independent.end());
  std::sort(partition.matching.begin(), partition.matching.end());
  if (consistent && VerifySmePartition(g, partition)) return partition;

  SmeResult full = RecognizeSme(g);
  if (auto* accepted = std::get_if<SmePartition>(&full)) return *accepted;
  return std::nullopt;
}

}  // namespace chordsplit
