#include "chordsplit/harness.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "chordsplit/graph_io.h"
#include "chordsplit/recognizers.h"
#include "chordsplit/verify.h"

namespace chordsplit {

std::string TheoremSpec::Name() const {
  switch (kind) {
    case Kind::kSplit: return "T1";
    case Kind::kTwoGood: return "T2";
    case Kind::kGoodClique: return "T3(h=" + std::to_string(h) + ")";
    case Kind::kSme: return "T4";
  }
  return "";
}

TheoremSpec TheoremSpec::Parse(const std::string& name) {
  if (name == "T1") return {Kind::kSplit, 1};
  if (name == "T2") return {Kind::kTwoGood, 2};
  if (name == "T4") return {Kind::kSme, 0};
  if (name.starts_with("T3(h=") && name.ends_with(")")) {
    std::string digits = name.substr(5, name.size() - 6);
    if (!digits.empty() && digits.size() < 4 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      int h = std::stoi(digits);
      if (h >= 1) return {Kind::kGoodClique, h};
    }
  }
  throw std::invalid_argument("unknown theorem '" + name + "' (expected T1, T2, T3(h=N), T4)");
}

namespace {

bool IsConnected(const Graph& g) {
  return g.num_vertices() == 0 || Components(g, g.AllVertices()).components.size() == 1;
}

std::string Flag(bool b) { return b ? "1" : "0"; }

bool FreeOf(const Graph& g, std::initializer_list<std::string_view> names) {
  for (std::string_view name : names) {
    if (FindInduced(g, *FindPattern(name))) return false;
  }
  return true;
}

class Evaluator {
 public:
  Evaluator(const CorpusSpec& corpus, const std::vector<TheoremSpec>& theorems)
      : corpus_(corpus), theorems_(theorems), reports_(theorems.size()) {
    for (size_t i = 0; i < theorems.size(); ++i) reports_[i].theorem = theorems[i].Name();
  }

  void Evaluate(uint64_t key, const Graph& g) {
    if (corpus_.connected_only && !IsConnected(g)) return;
    key_ = key;
    g_ = &g;
    chordality_ = IsChordal(g);
    if (corpus_.chordal_only && !chordality_.chordal()) return;
    cliques_over_bound_ = false;
    if (chordality_.chordal()) {
      CliqueList cliques = MaximalCliquesChordal(g, chordality_.elimination.ordering);
      cliques_over_bound_ = static_cast<int>(cliques.size()) > g.num_vertices();
    }
    for (size_t i = 0; i < theorems_.size(); ++i) {
      TheoremReport& report = reports_[i];
      if (cliques_over_bound_) ++report.clique_bound_violations;
      try {
        switch (theorems_[i].kind) {
          case TheoremSpec::Kind::kSplit: Split(report); break;
          case TheoremSpec::Kind::kTwoGood: TwoGood(report); break;
          case TheoremSpec::Kind::kGoodClique: GoodClique(report, theorems_[i].h); break;
          case TheoremSpec::Kind::kSme: Sme(report); break;
        }
      } catch (const PreconditionViolation& e) {
        ++report.lemma_diagnostics;
        Report(report, e.what());
      } catch (const std::exception& e) {
        Report(report, std::string("exception: ") + e.what());
      }
    }
  }

  std::vector<TheoremReport>& reports() { return reports_; }

 private:
  void Report(TheoremReport& report, std::string detail) {
    report.discrepancies.push_back(
        {g_->num_vertices(), key_, WriteGraph6(*g_), std::move(detail)});
  }

  void Check(TheoremReport& report, const Verdict& verdict, const char* what) {
    ++report.certificates_checked;
    if (!verdict) {
      ++report.certificate_failures;
      Report(report, std::string(what) + ": " + verdict.reason);
    }
  }

  // Verifies the certified result and its trace; returns acceptance.
  bool Certified(TheoremReport& report, int k) {
    CertifiedResult result = FindKGoodCertified(*g_, k);
    if (result.accepted()) {
      Check(report, VerifyGoodClique(*g_, std::get<GoodCliqueCertificate>(result.outcome)),
            "certified certificate");
    } else {
      Check(report,
            VerifyRejection(*g_, std::get<RejectionWitness>(result.outcome),
                            GraphClass::GoodClique(k)),
            "certified witness");
    }
    report.certified_rounds += result.trace.size();
    bool progress = static_cast<int>(result.trace.size()) <= g_->num_vertices();
    for (size_t i = 1; i < result.trace.size(); ++i) {
      if (result.trace[i].nontrivial_size >= result.trace[i - 1].nontrivial_size) {
        progress = false;
      }
    }
    if (!progress) {
      ++report.progress_violations;
      Report(report, "certified trace does not shrink");
    }
    return result.accepted();
  }

  bool Scan(TheoremReport& report, int k) {
    auto cert = FindKGoodScan(*g_, k);
    if (cert) Check(report, VerifyGoodClique(*g_, *cert), "scan certificate");
    return cert.has_value();
  }

  void Tally(TheoremReport& report, std::initializer_list<std::pair<const char*, bool>> sides) {
    ++report.graphs;
    bool first = sides.begin()->second;
    bool agree = true;
    for (const auto& side : sides) agree = agree && side.second == first;
    if (first) ++report.accepted;
    if (!agree) {
      std::string detail = "sides disagree:";
      for (const auto& [name, value] : sides) detail += std::string(" ") + name + "=" + Flag(value);
      Report(report, detail);
    }
  }

  void Split(TheoremReport& report) {
    const Graph& g = *g_;
    const bool chordal = chordality_.chordal();
    if (!chordal) Check(report, VerifyHole(g, *chordality_.hole), "hole");
    SplitResult split = RecognizeSplit(g);
    if (const auto* partition = std::get_if<SplitPartition>(&split)) {
      Check(report, VerifySplitPartition(g, *partition), "split partition");
    } else {
      Check(report,
            VerifyRejection(g, std::get<RejectionWitness>(split), GraphClass::Split()),
            "split witness");
    }
    const bool certified = Certified(report, 1);
    const bool forbidden_free = chordal && !FindInduced(g, *FindPattern("2k2"));
    const bool oracle = OracleKGood(g, 1).has_value();
    const bool scan = chordal ? Scan(report, 1) : false;
    Tally(report, {{"split", std::holds_alternative<SplitPartition>(split)},
                   {"certified", certified},
                   {"free", forbidden_free},
                   {"oracle", oracle},
                   {"scan", scan}});
  }

  void TwoGood(TheoremReport& report) {
    if (!chordality_.chordal()) return;
    const Graph& g = *g_;
    const bool certified = Certified(report, 2);
    const bool forbidden_free = FreeOf(g, {"2p3", "k3+p3", "2k3"});
    const bool oracle = OracleKGood(g, 2).has_value();
    Tally(report, {{"certified", certified}, {"free", forbidden_free}, {"oracle", oracle}});
  }

  void GoodClique(TheoremReport& report, int h) {
    if (!chordality_.chordal()) return;
    const Graph& g = *g_;
    const bool certified = Certified(report, h);
    auto oracle_pair = OracleAPair(g, h + 1);
    if (oracle_pair) Check(report, VerifyAPair(g, *oracle_pair), "oracle A-pair");
    auto found_pair = FindAPair(g, h + 1);
    if (found_pair) Check(report, VerifyAPair(g, *found_pair), "A-pair search");
    const bool oracle = OracleKGood(g, h).has_value();
    const bool scan = Scan(report, h);
    Tally(report, {{"certified", certified},
                   {"oracle-free", !oracle_pair.has_value()},
                   {"search-free", !found_pair.has_value()},
                   {"oracle", oracle},
                   {"scan", scan}});
  }

  void Sme(TheoremReport& report) {
    const Graph& g = *g_;
    SmeResult sme = RecognizeSme(g);
    const bool accepted = std::holds_alternative<SmePartition>(sme);
    if (accepted) {
      Check(report, VerifySmePartition(g, std::get<SmePartition>(sme)), "sme partition");
    } else {
      Check(report, VerifyRejection(g, std::get<RejectionWitness>(sme), GraphClass::Sme()),
            "sme witness");
    }
    bool forbidden_free = chordality_.chordal();
    for (std::string_view name : SmeFixedPatternNames()) {
      if (!forbidden_free) break;
      forbidden_free = !FindInduced(g, *FindPattern(name));
    }
    const bool oracle = OracleSme(g).has_value();
    auto linear = RecognizeSmeLinear(g);
    if (linear) Check(report, VerifySmePartition(g, *linear), "linear sme partition");
    Tally(report, {{"sme", accepted},
                   {"free", forbidden_free},
                   {"oracle", oracle},
                   {"linear", linear.has_value()}});
  }

  const CorpusSpec& corpus_;
  const std::vector<TheoremSpec>& theorems_;
  std::vector<TheoremReport> reports_;
  const Graph* g_ = nullptr;
  uint64_t key_ = 0;
  ChordalityResult chordality_;
  bool cliques_over_bound_ = false;
};

void Merge(std::vector<TheoremReport>& into, std::vector<TheoremReport>& from) {
  for (size_t i = 0; i < into.size(); ++i) {
    TheoremReport& a = into[i];
    TheoremReport& b = from[i];
    a.graphs += b.graphs;
    a.accepted += b.accepted;
    a.certificates_checked += b.certificates_checked;
    a.certificate_failures += b.certificate_failures;
    a.lemma_diagnostics += b.lemma_diagnostics;
    a.progress_violations += b.progress_violations;
    a.certified_rounds += b.certified_rounds;
    a.clique_bound_violations += b.clique_bound_violations;
    a.discrepancies.insert(a.discrepancies.end(), b.discrepancies.begin(),
                           b.discrepancies.end());
  }
}

}  // namespace

std::vector<TheoremReport> RunEquivalence(const CorpusSpec& corpus,
                                          const std::vector<TheoremSpec>& theorems,
                                          int jobs) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  std::vector<Graph> stream;
  if (corpus.graph6_path) {
    std::ifstream in(*corpus.graph6_path);
    if (!in) throw ParseError("cannot open corpus " + *corpus.graph6_path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line == "\r") continue;
      try {
        stream.push_back(ParseGraph6(line));
      } catch (const ParseError& e) {
        throw ParseError(*corpus.graph6_path + ":" + std::to_string(line_no) + ": " + e.what(),
                         line_no);
      }
    }
  } else if (corpus.max_n > corpus.guard) {
    throw GuardExceeded("max_n = " + std::to_string(corpus.max_n) + " exceeds the guard " +
                        std::to_string(corpus.guard));
  }

  std::vector<Evaluator> workers;
  for (int j = 0; j < jobs; ++j) workers.emplace_back(corpus, theorems);
  auto run = [&](int j) {
    Evaluator& worker = workers[j];
    if (corpus.graph6_path) {
      for (size_t i = static_cast<size_t>(j); i < stream.size(); i += static_cast<size_t>(jobs)) {
        worker.Evaluate(i + 1, stream[i]);
      }
      return;
    }
    for (int n = std::max(0, corpus.min_n); n <= corpus.max_n; ++n) {
      const uint64_t count = LabeledGraphCount(n);
      for (uint64_t mask = static_cast<uint64_t>(j); mask < count;
           mask += static_cast<uint64_t>(jobs)) {
        worker.Evaluate(mask, GraphFromEdgeMask(n, mask));
      }
    }
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(run, j);
    for (auto& t : threads) t.join();
  }

  std::vector<TheoremReport> reports = std::move(workers[0].reports());
  for (int j = 1; j < jobs; ++j) Merge(reports, workers[j].reports());
  for (auto& report : reports) {
    std::sort(report.discrepancies.begin(), report.discrepancies.end(),
              [](const Discrepancy& a, const Discrepancy& b) {
                return std::tie(a.n, a.key, a.detail) < std::tie(b.n, b.key, b.detail);
              });
  }
  return reports;
}

}  // namespace chordsplit
