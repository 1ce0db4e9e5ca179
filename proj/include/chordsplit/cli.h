#ifndef CHORDSPLIT_CLI_H_
#define CHORDSPLIT_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chordsplit/graph.h"

namespace chordsplit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitInternal = 4;

// Subcommands: classify, verify-theorems, witness, generate, bench.
// Returns the exit code.
int RunCli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
           std::ostream& err);

// Named fixture graphs: every catalog pattern plus "pendant-c4" (a C4 with a
// pendant vertex on three of its vertices). std::nullopt for unknown names.
std::optional<Graph> Fixture(const std::string& name);

struct BenchRow {
  int n = 0;
  int m = 0;
  int cliques = 0;
  // Fastest of the repeated k-good scans.
  double millis = 0.0;
  bool found = false;
};

// Times FindKGoodScan on RandomChordal(n, density, seed) for each n.
std::vector<BenchRow> RunBench(const std::vector<int>& sizes, uint64_t seed, int k,
                               double density, int repeat);

// Least-squares slope of log(millis) against log(n * m) over rows with m > 0.
// NaN with fewer than two such rows.
double LogLogSlope(const std::vector<BenchRow>& rows);

}  // namespace chordsplit

#endif  // CHORDSPLIT_CLI_H_
