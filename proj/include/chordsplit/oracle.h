#ifndef CHORDSPLIT_ORACLE_H_
#define CHORDSPLIT_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "chordsplit/certificates.h"

namespace chordsplit {

// Brute-force ground truth. Nothing here calls into the recognizers, the
// chordality engine or the pattern search.

inline constexpr int kDefaultExhaustiveLimit = 7;
inline constexpr int kDefaultOracleLimit = 16;

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Number of labeled graphs on n vertices, 2^(n(n-1)/2).
uint64_t LabeledGraphCount(int n);

// Labeled graph whose edge set is given by `mask`: bit b stands for the b-th
// pair in the order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
Graph GraphFromEdgeMask(int n, uint64_t mask);

// Calls `visit(mask, graph)` for every labeled graph on n vertices in
// increasing mask order. Throws GuardExceeded when n > limit.
void EnumerateLabeledGraphs(int n, const std::function<void(uint64_t, const Graph&)>& visit,
                            int limit = kDefaultExhaustiveLimit);

// Tries every clique, maximal or not.
std::optional<GoodCliqueCertificate> OracleKGood(const Graph& g, int k,
                                                 int limit = kDefaultOracleLimit);

// Tries every pair of h-subsets.
std::optional<APairWitness> OracleAPair(const Graph& g, int h,
                                        int limit = kDefaultOracleLimit);

// Tries every clique against the split-matching-extended definition.
std::optional<SmePartition> OracleSme(const Graph& g, int limit = kDefaultOracleLimit);

// All maximal cliques, each sorted, in lexicographic order.
std::vector<VertexList> OracleMaximalCliques(const Graph& g, int limit = kDefaultOracleLimit);

// Induced cycle of length at least 4, by subset enumeration.
bool OracleHasHole(const Graph& g, int limit = kDefaultOracleLimit);

// Induced copy of `pattern` by trying every injective map.
bool OracleContains(const Graph& g, const Graph& pattern, int limit = kDefaultOracleLimit);

// Random chordal graph by simplicial attachment: each new vertex is joined
// to a random non-empty subset of a random maximal clique, each member kept
// with probability `density`. Deterministic for a given seed.
Graph RandomChordal(int n, double density, uint64_t seed);

}  // namespace chordsplit

#endif  // CHORDSPLIT_ORACLE_H_
