#ifndef CHORDSPLIT_CERTIFICATES_H_
#define CHORDSPLIT_CERTIFICATES_H_

#include <string>
#include <variant>
#include <vector>

#include "chordsplit/chordal.h"
#include "chordsplit/graph.h"
#include "chordsplit/patterns.h"

namespace chordsplit {

// A k-good clique: every component of g - clique has at most k vertices.
struct GoodCliqueCertificate {
  int k = 0;
  VertexList clique;
  ComponentDecomposition decomposition;
};

struct SplitPartition {
  VertexList clique;
  VertexList independent;
};

// Clique Q, independent set S and induced matching M partitioning V, with S
// co-joined to V(M) and at most one endpoint of each matching edge seeing Q.
struct SmePartition {
  VertexList clique;
  VertexList independent;
  std::vector<Edge> matching;
};

using RejectionWitness = std::variant<HoleWitness, Embedding, APairWitness>;

// The recognizable classes. `k` is used by kGoodClique only.
struct GraphClass {
  enum class Kind { kChordal, kSplit, kGoodClique, kSme };
  Kind kind = Kind::kChordal;
  int k = 0;

  static GraphClass Chordal() { return {Kind::kChordal, 0}; }
  static GraphClass Split() { return {Kind::kSplit, 0}; }
  static GraphClass GoodClique(int k) { return {Kind::kGoodClique, k}; }
  static GraphClass Sme() { return {Kind::kSme, 0}; }

  // "chordal", "split", "kgs(k)" or "sme".
  std::string Name() const;
  // Inverse of Name(). Throws std::invalid_argument on unknown names.
  static GraphClass Parse(const std::string& name);

  bool operator==(const GraphClass&) const = default;
};

}  // namespace chordsplit

#endif  // CHORDSPLIT_CERTIFICATES_H_
