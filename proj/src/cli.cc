#include "chordsplit/cli.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "chordsplit/graph_io.h"
#include "chordsplit/harness.h"
#include "chordsplit/oracle.h"
#include "chordsplit/recognizers.h"
#include "chordsplit/report.h"

namespace chordsplit {
namespace {

struct Record {
  std::string source;
  int line = 0;
  std::string text;
};

struct Outcome {
  std::vector<std::string> lines;
  std::string error;
  int code = kExitOk;
};

int DefaultJobs(int jobs) {
  if (jobs > 0) return jobs;
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

Graph ParseRecord(const Record& r, bool graph6) {
  return graph6 ? ParseGraph6(r.text) : ParseEdgeList(r.text);
}

// Reads records from each input and hands them to `process` in chunks;
// results are written in input order whatever the worker count.
class RecordPipeline {
 public:
  RecordPipeline(bool graph6, int jobs, std::istream& in, std::ostream& out, std::ostream& err)
      : graph6_(graph6), jobs_(DefaultJobs(jobs)), in_(in), out_(out), err_(err) {}

  template <typename Fn>
  int Run(const std::vector<std::string>& inputs, Fn process) {
    std::vector<std::string> sources = inputs.empty() ? std::vector<std::string>{"-"} : inputs;
    int status = kExitOk;
    for (const std::string& source : sources) {
      std::ifstream file;
      std::istream* stream = &in_;
      const std::string name = source == "-" ? "stdin" : source;
      if (source != "-") {
        file.open(source);
        if (!file) {
          err_ << "error: cannot open " << source << "\n";
          status = std::max(status, kExitParseError);
          continue;
        }
        stream = &file;
      }
      status = std::max(status, graph6_ ? RunLines(*stream, name, process)
                                        : RunWhole(*stream, name, process));
    }
    return status;
  }

 private:
  template <typename Fn>
  int RunWhole(std::istream& stream, const std::string& name, Fn& process) {
    std::ostringstream text;
    text << stream.rdbuf();
    std::vector<Record> chunk{{name, 1, text.str()}};
    return Flush(chunk, process);
  }

  template <typename Fn>
  int RunLines(std::istream& stream, const std::string& name, Fn& process) {
    const size_t chunk_size = 64 * static_cast<size_t>(jobs_);
    std::vector<Record> chunk;
    std::string line;
    int status = kExitOk;
    for (int number = 1; std::getline(stream, line); ++number) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      chunk.push_back({name, number, line});
      if (chunk.size() >= chunk_size) status = std::max(status, Flush(chunk, process));
    }
    return std::max(status, Flush(chunk, process));
  }

  template <typename Fn>
  int Flush(std::vector<Record>& chunk, Fn& process) {
    std::vector<Outcome> outcomes(chunk.size());
    auto work = [&](size_t i) {
      const Record& r = chunk[i];
      Outcome& o = outcomes[i];
      std::string id = r.source + ":" + std::to_string(r.line);
      try {
        Graph g = ParseRecord(r, graph6_);
        o = process(id, g);
      } catch (const ParseError& e) {
        int line = graph6_ || e.line() == 0 ? r.line : e.line();
        o.error = r.source + ":" + std::to_string(line) + ": " + e.what();
        o.code = kExitParseError;
      } catch (const std::exception& e) {
        o.error = id + ": internal error: " + e.what();
        o.code = kExitInternal;
      }
    };
    const int workers = std::min<int>(jobs_, static_cast<int>(chunk.size()));
    if (workers <= 1) {
      for (size_t i = 0; i < chunk.size(); ++i) work(i);
    } else {
      std::atomic<size_t> next{0};
      std::vector<std::thread> threads;
      for (int t = 0; t < workers; ++t) {
        threads.emplace_back([&] {
          for (size_t i = next++; i < chunk.size(); i = next++) work(i);
        });
      }
      for (auto& thread : threads) thread.join();
    }
    int status = kExitOk;
    for (const Outcome& o : outcomes) {
      for (const std::string& line : o.lines) out_ << line << "\n";
      if (!o.error.empty()) err_ << "error: " << o.error << "\n";
      status = std::max(status, o.code);
    }
    chunk.clear();
    return status;
  }

  bool graph6_;
  int jobs_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

struct ClassifyArgs {
  std::vector<std::string> inputs;
  std::string format = "graph6";
  std::vector<int> ks{2};
  std::string emit = "json";
  bool no_timing = false;
  int jobs = 0;
};

int Classify(const ClassifyArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RecordPipeline pipeline(args.format == "graph6", args.jobs, in, out, err);
  const bool json = args.emit == "json";
  const bool timing = !args.no_timing;
  return pipeline.Run(args.inputs, [&](const std::string& id, const Graph& g) {
    Outcome o;
    for (const ClassVerdict& v : chordsplit::Classify(g, args.ks)) {
      o.lines.push_back(json ? JsonLine(id, v, timing) : TextLine(id, v, timing));
    }
    return o;
  });
}

struct WitnessArgs {
  std::vector<std::string> inputs;
  std::string format = "graph6";
  std::string cls;
  std::string emit = "json";
  bool no_timing = false;
  int jobs = 0;
};

int Witness(const WitnessArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const GraphClass cls = GraphClass::Parse(args.cls);
  RecordPipeline pipeline(args.format == "graph6", args.jobs, in, out, err);
  const bool json = args.emit == "json";
  const bool timing = !args.no_timing;
  return pipeline.Run(args.inputs, [&](const std::string& id, const Graph& g) {
    Outcome o;
    ClassVerdict v = Decide(g, cls);
    o.lines.push_back(json ? JsonLine(id, v, timing) : TextLine(id, v, timing));
    if (v.accepted) {
      o.error = id + ": graph is " + cls.Name() + "; printed its certificate instead";
      o.code = kExitMismatch;
    }
    return o;
  });
}

struct VerifyArgs {
  int min_n = 0;
  int max_n = 6;
  int guard = kDefaultExhaustiveLimit;
  std::vector<std::string> theorems{"T1", "T2", "T3", "T4"};
  std::vector<int> hs{1, 2, 3};
  int jobs = 0;
  std::string graph6;
  bool connected = false;
  bool chordal_only = false;
};

int VerifyTheorems(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<TheoremSpec> specs;
  for (const std::string& name : args.theorems) {
    if (name == "T3") {
      for (int h : args.hs) specs.push_back({TheoremSpec::Kind::kGoodClique, h});
    } else {
      specs.push_back(TheoremSpec::Parse(name));
    }
  }
  CorpusSpec corpus;
  corpus.min_n = args.min_n;
  corpus.max_n = args.max_n;
  corpus.guard = args.guard;
  if (!args.graph6.empty()) corpus.graph6_path = args.graph6;
  corpus.connected_only = args.connected;
  corpus.chordal_only = args.chordal_only;

  std::vector<TheoremReport> reports;
  try {
    reports = RunEquivalence(corpus, specs, DefaultJobs(args.jobs));
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ParseError& e) {
    err << "error: " << args.graph6 << ":" << e.line() << ": " << e.what() << "\n";
    return kExitParseError;
  }
  bool clean = true;
  for (const TheoremReport& r : reports) {
    out << r.theorem << " graphs=" << r.graphs << " accepted=" << r.accepted
        << " certificates=" << r.certificates_checked
        << " certificate-failures=" << r.certificate_failures
        << " lemma-diagnostics=" << r.lemma_diagnostics << " rounds=" << r.certified_rounds
        << " progress-violations=" << r.progress_violations
        << " clique-bound-violations=" << r.clique_bound_violations
        << " discrepancies=" << r.discrepancies.size() << "\n";
    for (const Discrepancy& d : r.discrepancies) {
      out << "  n=" << d.n << " key=" << d.key << " graph6=" << d.graph6 << " " << d.detail
          << "\n";
    }
    clean = clean && r.clean();
  }
  out << (clean ? "clean" : "DISCREPANCIES FOUND") << "\n";
  return clean ? kExitOk : kExitMismatch;
}

struct GenerateArgs {
  std::string model;
  int n = 10;
  uint64_t seed = 1;
  double density = 0.3;
  int count = 1;
  std::string format = "graph6";
};

std::optional<Graph> Model(const GenerateArgs& args, uint64_t seed) {
  const int n = args.n;
  std::vector<Edge> edges;
  if (args.model == "chordal") return RandomChordal(n, args.density, seed);
  if (args.model == "path") {
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  } else if (args.model == "cycle") {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  } else if (args.model == "complete") {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
  } else if (args.model == "star") {
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  } else {
    return Fixture(args.model);
  }
  return Graph::FromEdges(n, edges);
}

int Generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  for (int i = 0; i < args.count; ++i) {
    std::optional<Graph> g = Model(args, args.seed + static_cast<uint64_t>(i));
    if (!g) {
      err << "error: unknown model or fixture '" << args.model << "'\n";
      return kExitParseError;
    }
    if (args.format == "graph6") {
      out << WriteGraph6(*g) << "\n";
    } else {
      out << WriteEdgeList(*g);
    }
  }
  return kExitOk;
}

struct BenchArgs {
  std::vector<int> sizes{1000, 10000, 100000};
  uint64_t seed = 1;
  int k = 2;
  double density = 0.3;
  int repeat = 3;
  std::string emit = "text";
};

int Bench(const BenchArgs& args, std::ostream& out) {
  std::vector<BenchRow> rows = RunBench(args.sizes, args.seed, args.k, args.density,
                                        args.repeat);
  const double slope = LogLogSlope(rows);
  if (args.emit == "json") {
    nlohmann::ordered_json doc = {{"seed", args.seed},
                                  {"k", args.k},
                                  {"density", args.density},
                                  {"rows", nlohmann::ordered_json::array()}};
    for (const BenchRow& r : rows) {
      doc["rows"].push_back({{"n", r.n},
                             {"m", r.m},
                             {"cliques", r.cliques},
                             {"millis", r.millis},
                             {"found", r.found}});
    }
    if (std::isfinite(slope)) doc["slope"] = slope;
    out << doc.dump() << "\n";
    return kExitOk;
  }
  char buffer[160];
  for (const BenchRow& r : rows) {
    std::snprintf(buffer, sizeof(buffer), "n=%d m=%d cliques=%d millis=%.3f found=%s\n", r.n,
                  r.m, r.cliques, r.millis, r.found ? "yes" : "no");
    out << buffer;
  }
  if (std::isfinite(slope)) {
    std::snprintf(buffer, sizeof(buffer), "slope=%.3f\n", slope);
    out << buffer;
  }
  return kExitOk;
}

}  // namespace

std::optional<Graph> Fixture(const std::string& name) {
  if (name == "pendant-c4") {
    return Graph::FromEdges(
        7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}});
  }
  if (const Pattern* p = FindPattern(name)) return p->graph;
  return std::nullopt;
}

std::vector<BenchRow> RunBench(const std::vector<int>& sizes, uint64_t seed, int k,
                               double density, int repeat) {
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    Graph g = RandomChordal(n, density, seed);
    BenchRow row{n, g.num_edges(), 0, std::numeric_limits<double>::infinity(), false};
    row.cliques = static_cast<int>(
        MaximalCliquesChordal(g, IsChordal(g).elimination.ordering).size());
    for (int i = 0; i < std::max(1, repeat); ++i) {
      const auto start = std::chrono::steady_clock::now();
      row.found = FindKGoodScan(g, k).has_value();
      const double millis =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      row.millis = std::min(row.millis, millis);
    }
    rows.push_back(row);
  }
  return rows;
}

double LogLogSlope(const std::vector<BenchRow>& rows) {
  std::vector<std::pair<double, double>> points;
  for (const BenchRow& r : rows) {
    if (r.m > 0 && r.millis > 0) {
      points.emplace_back(std::log(static_cast<double>(r.n) * r.m), std::log(r.millis));
    }
  }
  if (points.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0, my = 0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double cov = 0, var = 0;
  for (const auto& [x, y] : points) {
    cov += (x - mx) * (y - my);
    var += (x - mx) * (x - mx);
  }
  return var > 0 ? cov / var : std::numeric_limits<double>::quiet_NaN();
}

int RunCli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Recognition of chordal graphs with good cliques, with certificates."};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"graph6", "edgelist"};
  const std::vector<std::string> emits{"json", "text"};

  ClassifyArgs classify;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Decide chordal, split, kgs(k) and sme for every input graph.");
  classify_cmd->add_option("inputs", classify.inputs, "Input files; '-' or none reads stdin.");
  classify_cmd->add_option("--format", classify.format, "Input format.")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  classify_cmd->add_option("-k,--k", classify.ks, "Component bounds for kgs(k).")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  classify_cmd->add_option("--emit", classify.emit, "Output format.")
      ->check(CLI::IsMember(emits))
      ->capture_default_str();
  classify_cmd->add_flag("--no-timing", classify.no_timing, "Report millis as 0.");
  classify_cmd->add_option("--jobs", classify.jobs, "Worker threads (0: all cores).");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-theorems", "Check the forbidden-structure characterizations over a corpus.");
  // "--h" would collide with "-h".
  verify_cmd->set_help_flag("--help", "Print this help message and exit");
  verify_cmd->add_option("--min-n", verify.min_n, "Smallest n enumerated.")
      ->capture_default_str();
  verify_cmd->add_option("--max-n", verify.max_n, "Largest n enumerated.")
      ->capture_default_str();
  verify_cmd->add_option("--guard", verify.guard, "Refuse to enumerate beyond this n.")
      ->capture_default_str();
  verify_cmd->add_option("--theorems", verify.theorems, "T1, T2, T3, T4 or T3(h=N).")
      ->delimiter(',')
      ->capture_default_str();
  verify_cmd->add_option("--h", verify.hs, "Values of h for T3.")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (0: all cores).");
  verify_cmd->add_option("--graph6", verify.graph6, "Read the corpus from a graph6 file.");
  verify_cmd->add_flag("--connected", verify.connected, "Only connected graphs.");
  verify_cmd->add_flag("--chordal-only", verify.chordal_only, "Only chordal graphs.");

  WitnessArgs witness;
  CLI::App* witness_cmd =
      app.add_subcommand("witness", "Print the rejection witness for one class.");
  witness_cmd->add_option("inputs", witness.inputs, "Input files; '-' or none reads stdin.");
  witness_cmd->add_option("--class", witness.cls, "chordal, split, kgs(k) or sme.")
      ->required();
  witness_cmd->add_option("--format", witness.format, "Input format.")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  witness_cmd->add_option("--emit", witness.emit, "Output format.")
      ->check(CLI::IsMember(emits))
      ->capture_default_str();
  witness_cmd->add_flag("--no-timing", witness.no_timing, "Report millis as 0.");
  witness_cmd->add_option("--jobs", witness.jobs, "Worker threads (0: all cores).");

  GenerateArgs generate;
  CLI::App* generate_cmd = app.add_subcommand(
      "generate", "Write graphs: chordal, path, cycle, complete, star, or a fixture name.");
  generate_cmd->add_option("model", generate.model, "Model or fixture name.")->required();
  generate_cmd->add_option("-n,--n", generate.n, "Number of vertices.")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  generate_cmd->add_option("--seed", generate.seed, "Random seed.")->capture_default_str();
  generate_cmd->add_option("--density", generate.density, "Chordal model density.")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  generate_cmd->add_option("--count", generate.count, "Graphs to write (seeds increase).")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate_cmd->add_option("--format", generate.format, "Output format.")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  BenchArgs bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Time the k-good clique scan on random chordal graphs.");
  bench_cmd->add_option("-n,--n", bench.sizes, "Graph sizes.")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Random seed.")->capture_default_str();
  bench_cmd->add_option("-k,--k", bench.k, "Component bound.")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench_cmd->add_option("--density", bench.density, "Chordal model density.")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  bench_cmd->add_option("--repeat", bench.repeat, "Runs per size; the fastest counts.")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--emit", bench.emit, "Output format.")
      ->check(CLI::IsMember(std::vector<std::string>{"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (*classify_cmd) return Classify(classify, in, out, err);
    if (*verify_cmd) return VerifyTheorems(verify, out, err);
    if (*witness_cmd) return Witness(witness, in, out, err);
    if (*generate_cmd) return Generate(generate, out, err);
    if (*bench_cmd) return Bench(bench, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitParseError;
}

}  // namespace chordsplit
