// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "chordsplit/chordal.h"
#include "chordsplit/cli.h"
#include "chordsplit/harness.h"
#include "chordsplit/oracle.h"
#include "chordsplit/recognizers.h"
#include "chordsplit/report.h"
#include "chordsplit/verify.h"

namespace chordsplit {
namespace {

struct Tally {
  uint64_t graphs = 0;
  uint64_t certificates = 0;
  uint64_t failures = 0;
  uint64_t diagnostics = 0;
  uint64_t progress_violations = 0;
  uint64_t clique_bound_violations = 0;
  uint64_t discrepancies = 0;

  void Add(const TheoremReport& r) {
    graphs += r.graphs;
    certificates += r.certificates_checked;
    failures += r.certificate_failures;
    diagnostics += r.lemma_diagnostics;
    progress_violations += r.progress_violations;
    clique_bound_violations += r.clique_bound_violations;
    discrepancies += r.discrepancies.size();
  }
};

int failed = 0;

void Print(int criterion, bool pass, const std::string& detail) {
  if (!pass) ++failed;
  std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string Describe(const std::vector<TheoremReport>& reports, double seconds) {
  std::string out;
  for (const TheoremReport& r : reports) {
    out += r.theorem + ": graphs=" + std::to_string(r.graphs) +
           " discrepancies=" + std::to_string(r.discrepancies.size()) + "; ";
    for (size_t i = 0; i < std::min<size_t>(3, r.discrepancies.size()); ++i) {
      const Discrepancy& d = r.discrepancies[i];
      std::fprintf(stderr, "  %s n=%d graph6=%s %s\n", r.theorem.c_str(), d.n,
                   d.graph6.c_str(), d.detail.c_str());
    }
  }
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.1fs", seconds);
  return out + buffer;
}

std::vector<TheoremReport> RunTheorems(const CorpusSpec& corpus,
                                       const std::vector<TheoremSpec>& theorems,
                                       double* seconds) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<TheoremReport> reports = RunEquivalence(corpus, theorems);
  *seconds = SecondsSince(start);
  return reports;
}

// Random chordal instances: every class decision verified, certified traces
// checked for progress, maximal cliques counted.
struct RandomSweep {
  uint64_t graphs = 0;
  uint64_t verdicts = 0;
  uint64_t failures = 0;
  uint64_t diagnostics = 0;
  uint64_t progress_violations = 0;
  uint64_t clique_bound_violations = 0;
  uint64_t scan_disagreements = 0;
};

RandomSweep SweepRandomChordal(int count) {
  RandomSweep sweep;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> size(1, 200);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  const std::vector<int> ks{1, 2, 3};
  for (int i = 0; i < count; ++i) {
    const int n = size(rng);
    Graph g = RandomChordal(n, density(rng), rng());
    ++sweep.graphs;
    try {
      sweep.verdicts += chordsplit::Classify(g, ks).size();
    } catch (const PreconditionViolation&) {
      ++sweep.diagnostics;
    } catch (const std::exception& e) {
      ++sweep.failures;
      std::fprintf(stderr, "  random graph %d: %s\n", i, e.what());
    }
    ChordalityResult chordality = IsChordal(g);
    if (!chordality.chordal() ||
        static_cast<int>(MaximalCliquesChordal(g, chordality.elimination.ordering).size()) > n) {
      ++sweep.clique_bound_violations;
    }
    for (int k : ks) {
      CertifiedResult r = FindKGoodCertified(g, k);
      bool progress = static_cast<int>(r.trace.size()) <= n;
      for (size_t j = 1; j < r.trace.size(); ++j) {
        progress = progress && r.trace[j].nontrivial_size < r.trace[j - 1].nontrivial_size;
      }
      if (!progress) ++sweep.progress_violations;
      if (FindKGoodScan(g, k).has_value() != r.accepted()) ++sweep.scan_disagreements;
    }
  }
  return sweep;
}

int Main() {
  Tally all;  // criteria 1-4
  Tally good_clique;  // criterion 3 corpora

  double seconds = 0;
  CorpusSpec up_to_6;
  up_to_6.max_n = 6;

  std::vector<TheoremReport> t1 = RunTheorems(up_to_6, {TheoremSpec::Parse("T1")}, &seconds);
  all.Add(t1[0]);
  Print(1, t1[0].clean() && seconds <= 300.0, Describe(t1, seconds));

  std::vector<TheoremReport> t2 = RunTheorems(up_to_6, {TheoremSpec::Parse("T2")}, &seconds);
  all.Add(t2[0]);
  Print(2, t2[0].clean(), Describe(t2, seconds));

  CorpusSpec chordal_up_to_7;
  chordal_up_to_7.max_n = 7;
  chordal_up_to_7.chordal_only = true;
  std::vector<TheoremReport> t3 = RunTheorems(
      chordal_up_to_7,
      {TheoremSpec::Parse("T3(h=1)"), TheoremSpec::Parse("T3(h=2)"), TheoremSpec::Parse("T3(h=3)")},
      &seconds);
  bool t3_clean = true;
  for (const TheoremReport& r : t3) {
    all.Add(r);
    good_clique.Add(r);
    t3_clean = t3_clean && r.clean();
  }
  Print(3, t3_clean, Describe(t3, seconds));

  // T4 also checks the linear recognizer against the general one per graph.
  std::vector<TheoremReport> t4 = RunTheorems(up_to_6, {TheoremSpec::Parse("T4")}, &seconds);
  all.Add(t4[0]);
  Print(4, t4[0].clean(), Describe(t4, seconds));

  const auto sweep_start = std::chrono::steady_clock::now();
  RandomSweep sweep = SweepRandomChordal(10000);
  const double sweep_seconds = SecondsSince(sweep_start);
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "exhaustive: %llu checked, %llu failed; random: %llu graphs, %llu verdicts, "
                "%llu failed, %llu scan disagreements; %.1fs",
                static_cast<unsigned long long>(all.certificates),
                static_cast<unsigned long long>(all.failures),
                static_cast<unsigned long long>(sweep.graphs),
                static_cast<unsigned long long>(sweep.verdicts),
                static_cast<unsigned long long>(sweep.failures),
                static_cast<unsigned long long>(sweep.scan_disagreements), sweep_seconds);
  Print(5, all.failures == 0 && sweep.failures == 0 && sweep.scan_disagreements == 0 &&
               sweep.verdicts == sweep.graphs * 6,
        detail);

  std::snprintf(detail, sizeof(detail), "diagnostics: %llu on %llu chordal graph checks, %llu random",
                static_cast<unsigned long long>(good_clique.diagnostics),
                static_cast<unsigned long long>(good_clique.graphs),
                static_cast<unsigned long long>(sweep.diagnostics));
  Print(6, good_clique.diagnostics == 0 && all.diagnostics == 0 && sweep.diagnostics == 0,
        detail);

  std::snprintf(detail, sizeof(detail), "violations: %llu exhaustive, %llu random",
                static_cast<unsigned long long>(all.progress_violations),
                static_cast<unsigned long long>(sweep.progress_violations));
  Print(7, all.progress_violations == 0 && sweep.progress_violations == 0, detail);

  {
    Graph g = *Fixture("pendant-c4");
    CertifiedResult r = FindKGoodCertified(g, 2);
    bool pass = !r.accepted() && !OracleKGood(g, 2).has_value();
    std::string shape = "accepted";
    if (!r.accepted()) {
      const RejectionWitness& w = std::get<RejectionWitness>(r.outcome);
      pass = pass && VerifyRejection(g, w, GraphClass::GoodClique(2));
      const auto* hole = std::get_if<HoleWitness>(&w);
      if (hole == nullptr) {
        pass = false;
        shape = "non-hole witness";
      } else {
        std::vector<Vertex> cycle = hole->cycle;
        std::sort(cycle.begin(), cycle.end());
        pass = pass && cycle == std::vector<Vertex>{0, 1, 2, 3};
        shape = "hole";
        for (Vertex v : hole->cycle) shape += " " + std::to_string(v);
      }
    }
    Print(8, pass, "pendant-c4 with k=2: " + shape);
  }

  {
    std::vector<BenchRow> rows = RunBench({1000, 10000, 100000}, 1, 2, 0.3, 5);
    const double slope = LogLogSlope(rows);
    std::string text;
    for (const BenchRow& r : rows) {
      std::snprintf(detail, sizeof(detail), "n=%d m=%d %.1fms; ", r.n, r.m, r.millis);
      text += detail;
    }
    std::snprintf(detail, sizeof(detail), "slope=%.3f", slope);
    const bool fast = rows.back().millis <= 10000.0;
    Print(9, fast && std::fabs(slope - 1.0) <= 0.3, text + detail);
  }

  std::snprintf(detail, sizeof(detail), "violations: %llu exhaustive, %llu random",
                static_cast<unsigned long long>(all.clique_bound_violations),
                static_cast<unsigned long long>(sweep.clique_bound_violations));
  Print(10, all.clique_bound_violations == 0 && sweep.clique_bound_violations == 0, detail);

  std::printf("%s\n", failed == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace chordsplit

int main() { return chordsplit::Main(); }
