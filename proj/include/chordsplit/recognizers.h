#ifndef CHORDSPLIT_RECOGNIZERS_H_
#define CHORDSPLIT_RECOGNIZERS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "chordsplit/certificates.h"

namespace chordsplit {

// Raised by FindUniversalVertex when no vertex of the component sees the
// whole clique. The message names the violated precondition; when the
// failure is due to non-chordality the hole found by the diagnostic replay
// is attached.
class PreconditionViolation : public std::runtime_error {
 public:
  PreconditionViolation(const std::string& what, std::optional<HoleWitness> hole)
      : std::runtime_error(what), hole_(std::move(hole)) {}

  const std::optional<HoleWitness>& hole() const { return hole_; }

 private:
  std::optional<HoleWitness> hole_;
};

struct UniversalVertexDiagnosis {
  std::string violation;
  std::optional<HoleWitness> hole;
};

// Smallest z in `component` adjacent to every vertex of `clique`. In a
// chordal graph such a z exists whenever `clique` is a clique, `component` is
// a component of g - clique, and every clique vertex has a neighbor in the
// component. Throws PreconditionViolation (after running
// DiagnoseUniversalVertex) when the scan finds none.
Vertex FindUniversalVertex(const Graph& g, const VertexList& clique,
                           const VertexList& component);

// Re-checks the preconditions and, if they all hold, replays the inductive
// construction q_1, q_2, ... to localize the hole that must exist. Returns an
// empty violation string when a universal vertex exists after all.
UniversalVertexDiagnosis DiagnoseUniversalVertex(const Graph& g, const VertexList& clique,
                                                 const VertexList& component);

// Checks every maximal clique (from a perfect elimination ordering) and
// returns the first k-good one. Each check runs in O(n + m), so the scan is
// O(n(n + m)). Throws std::invalid_argument if g is not chordal.
std::optional<GoodCliqueCertificate> FindKGoodScan(const Graph& g, int k);

// One round of the certified recognizer.
struct CertifiedStep {
  int clique_size = 0;
  // Size of the unique component with more than k vertices.
  int nontrivial_size = 0;
  // Clique vertices with a neighbor in that component.
  int contact_size = 0;
  Vertex universal = -1;
};

struct CertifiedResult {
  std::variant<GoodCliqueCertificate, RejectionWitness> outcome;
  std::vector<CertifiedStep> trace;

  bool accepted() const {
    return std::holds_alternative<GoodCliqueCertificate>(outcome);
  }
};

// Certified recognition of chordal graphs with a k-good clique.
//
// Non-chordal input is rejected with a hole. Otherwise the search starts from
// a maximum clique Q and repeats: if g - Q has no component with more than k
// vertices, Q is returned. If it has two, they yield an A_{k+1} pair.
// Otherwise, with Z the unique large component and Q1 the vertices of Q
// seeing Z, a large component of g - (Q1 + Z) also yields an A_{k+1} pair
// with Z; failing that, Q becomes Q1 plus a vertex of Z universal for Q1.
// The large component shrinks every round. Every returned certificate or
// witness has passed verification.
CertifiedResult FindKGoodCertified(const Graph& g, int k);

using SplitResult = std::variant<SplitPartition, RejectionWitness>;

// Split recognition through the certified recognizer with k = 1; rejections
// are holes or induced 2K2 pairs.
SplitResult RecognizeSplit(const Graph& g);

using SmeResult = std::variant<SmePartition, RejectionWitness>;

// Split-matching-extended recognition. Maximal cliques of a chordal graph are
// tested against the definition; if none passes, a forbidden pattern is
// located (holes first). Throws std::logic_error if neither a partition nor
// a forbidden pattern exists.
SmeResult RecognizeSme(const Graph& g);

// Fast path: drop the degree-1 vertices, recognize the rest as a split graph
// by its degree sequence, and reattach the dropped vertices as independent
// vertices or matching partners. The reassembled partition is verified; on
// failure the answer comes from RecognizeSme. Returns std::nullopt on
// rejection.
std::optional<SmePartition> RecognizeSmeLinear(const Graph& g);

// Split test on the degree sequence of g restricted to `keep`. Returns the
// clique (the vertices of highest degree) when the induced graph is split.
std::optional<VertexList> SplitByDegrees(const Graph& g, const std::vector<char>& keep);

}  // namespace chordsplit

#endif  // CHORDSPLIT_RECOGNIZERS_H_
