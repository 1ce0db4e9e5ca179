#ifndef CHORDSPLIT_HARNESS_H_
#define CHORDSPLIT_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chordsplit/oracle.h"

namespace chordsplit {

// The characterizations checked by the harness.
//   kSplit:      chordal and 2K2-free  <=>  split.
//   kTwoGood:    chordal and (2P3, K3+P3, 2K3)-free  <=>  2-good clique.
//   kGoodClique: chordal and A_{h+1}-free  <=>  h-good clique.
//   kSme:        free of holes and the eight fixed patterns  <=>  SME.
struct TheoremSpec {
  enum class Kind { kSplit, kTwoGood, kGoodClique, kSme };
  Kind kind = Kind::kSplit;
  int h = 0;

  // "T1", "T2", "T3(h=2)", "T4".
  std::string Name() const;
  // Parses the names above; "T3" alone is not accepted.
  static TheoremSpec Parse(const std::string& name);
};

struct CorpusSpec {
  // All labeled graphs with min_n <= n <= max_n, unless graph6_path is set.
  int min_n = 0;
  int max_n = kDefaultExhaustiveLimit;
  int guard = kDefaultExhaustiveLimit;
  std::optional<std::string> graph6_path;
  bool connected_only = false;
  bool chordal_only = false;
};

struct Discrepancy {
  int n = 0;
  // Edge mask for enumerated corpora, 1-based line for graph6 streams.
  uint64_t key = 0;
  std::string graph6;
  std::string detail;
};

struct TheoremReport {
  std::string theorem;
  uint64_t graphs = 0;
  uint64_t accepted = 0;
  uint64_t certificates_checked = 0;
  uint64_t certificate_failures = 0;
  // Universal-vertex scans that needed the diagnostic replay.
  uint64_t lemma_diagnostics = 0;
  // Certified traces whose large component did not shrink every round or
  // that ran more than n rounds.
  uint64_t progress_violations = 0;
  uint64_t certified_rounds = 0;
  // Chordal graphs with more than n maximal cliques.
  uint64_t clique_bound_violations = 0;
  std::vector<Discrepancy> discrepancies;

  bool clean() const {
    return discrepancies.empty() && certificate_failures == 0 && lemma_diagnostics == 0 &&
           progress_violations == 0 && clique_bound_violations == 0;
  }
};

// Evaluates both sides of each theorem on every corpus graph: the
// forbidden-structure side through the pattern search and chordality
// engine, the partition side through the recognizers and the brute-force
// oracles. Every certificate and witness is verified. Graphs are split
// across `jobs` worker threads; discrepancies come back sorted by (n, key).
// Throws GuardExceeded when max_n exceeds the guard and ParseError for an
// unreadable graph6 stream.
std::vector<TheoremReport> RunEquivalence(const CorpusSpec& corpus,
                                          const std::vector<TheoremSpec>& theorems,
                                          int jobs = 0);

}  // namespace chordsplit

#endif  // CHORDSPLIT_HARNESS_H_
