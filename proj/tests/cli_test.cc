#include "chordsplit/cli.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chordsplit/graph_io.h"
#include "chordsplit/oracle.h"
#include "chordsplit/report.h"
#include "json.hpp"
#include "test_graphs.h"

namespace chordsplit {
namespace {

using json = nlohmann::ordered_json;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult RunTool(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "chordsplit");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = RunCli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  for (std::string line; std::getline(stream, line);) lines.push_back(line);
  return lines;
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = std::filesystem::temp_directory_path() /
            ("chordsplit_cli_" + std::to_string(reinterpret_cast<uintptr_t>(this)));
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(ClassifyTest, ButterflyEdgeListGolden) {
  RunResult r = RunTool({"classify", "--format", "edgelist", "--no-timing"},
                    WriteEdgeList(testing::Butterfly()));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.err, "");
  EXPECT_THAT(
      Lines(r.out),
      ElementsAre(
          R"j({"input":"stdin:1","class":"chordal","verdict":"accept","certificate":{"type":"peo","ordering":[4,3,2,1,0]},"millis":0.0})j",
          R"j({"input":"stdin:1","class":"split","verdict":"reject","witness":{"type":"a-pair","h":2,"x":[0,1],"y":[3,4]},"millis":0.0})j",
          R"j({"input":"stdin:1","class":"kgs(2)","verdict":"accept","certificate":{"type":"good-clique","k":2,"clique":[0,1,2],"components":[[3,4]]},"millis":0.0})j",
          R"j({"input":"stdin:1","class":"sme","verdict":"reject","witness":{"type":"pattern","name":"butterfly","map":[0,1,2,3,4]},"millis":0.0})j"));
}

TEST(ClassifyTest, CycleTextGolden) {
  RunResult r = RunTool({"classify", "--emit", "text", "--no-timing", "-k", "1"},
                    WriteGraph6(testing::Cycle(5)) + "\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_THAT(Lines(r.out), ElementsAre("stdin:1 chordal no hole cycle=[3,2,1,0,4]",
                                        "stdin:1 split no hole cycle=[3,2,1,0,4]",
                                        "stdin:1 kgs(1) no hole cycle=[3,2,1,0,4]",
                                        "stdin:1 sme no hole cycle=[3,2,1,0,4]"));
}

TEST(ClassifyTest, CompleteGraphAcceptsEverything) {
  RunResult r = RunTool({"classify", "--emit", "text", "--no-timing", "-k", "0,1,3"},
                    WriteGraph6(testing::Complete(4)) + "\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_THAT(
      Lines(r.out),
      ElementsAre("stdin:1 chordal yes peo ordering=[3,2,1,0]",
                  "stdin:1 split yes split-partition clique=[0,1,2,3] independent=[]",
                  "stdin:1 kgs(0) yes good-clique k=0 clique=[0,1,2,3] components=[]",
                  "stdin:1 kgs(1) yes good-clique k=1 clique=[0,1,2,3] components=[]",
                  "stdin:1 kgs(3) yes good-clique k=3 clique=[0,1,2,3] components=[]",
                  "stdin:1 sme yes sme-partition clique=[0,1,2,3] independent=[] matching=[]"));
}

TEST(ClassifyTest, FileAndStdinAgreeApartFromInputIds) {
  std::string corpus;
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    corpus += WriteGraph6(RandomChordal(6 + static_cast<int>(seed % 9), 0.4, seed)) + "\n";
  }
  corpus += WriteGraph6(testing::Cycle(6)) + "\n";
  TempFile file(corpus);
  RunResult from_stdin = RunTool({"classify", "--no-timing", "-k", "1,2"}, corpus);
  RunResult from_file = RunTool({"classify", "--no-timing", "-k", "1,2", "--jobs", "3", file.path()});
  ASSERT_EQ(from_stdin.code, 0);
  ASSERT_EQ(from_file.code, 0);
  std::vector<std::string> a = Lines(from_stdin.out);
  std::vector<std::string> b = Lines(from_file.out);
  ASSERT_EQ(a.size(), 41u * 5);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    json x = json::parse(a[i]);
    json y = json::parse(b[i]);
    EXPECT_EQ(x["input"], "stdin:" + std::to_string(i / 5 + 1));
    EXPECT_EQ(y["input"], file.path() + ":" + std::to_string(i / 5 + 1));
    x.erase("input");
    y.erase("input");
    EXPECT_EQ(x, y) << i;
  }
}

TEST(ClassifyTest, ParseErrorsAreReportedAndSkipped) {
  RunResult r = RunTool({"classify", "--emit", "text", "--no-timing"}, "C~\nbad!\n\nC~\n");
  EXPECT_EQ(r.code, kExitParseError);
  EXPECT_THAT(r.err, HasSubstr("stdin:2: "));
  std::vector<std::string> lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 8u);
  EXPECT_THAT(lines[0], HasSubstr("stdin:1 chordal yes"));
  EXPECT_THAT(lines[4], HasSubstr("stdin:4 chordal yes"));
}

TEST(ClassifyTest, EdgeListErrorsCarryTheirLine) {
  RunResult r = RunTool({"classify", "--format", "edgelist"}, "0 1\n1 x\n");
  EXPECT_EQ(r.code, kExitParseError);
  EXPECT_THAT(r.err, HasSubstr("stdin:2: "));
  EXPECT_EQ(r.out, "");
}

TEST(ClassifyTest, MissingFileIsAnError) {
  RunResult r = RunTool({"classify", "/nonexistent/graphs.g6"});
  EXPECT_EQ(r.code, kExitParseError);
  EXPECT_THAT(r.err, HasSubstr("cannot open"));
}

TEST(ClassifyTest, TimingIsReportedByDefault) {
  RunResult r = RunTool({"classify"}, WriteGraph6(RandomChordal(200, 0.5, 3)) + "\n");
  ASSERT_EQ(r.code, 0);
  double total = 0;
  for (const std::string& line : Lines(r.out)) total += json::parse(line)["millis"].get<double>();
  EXPECT_GT(total, 0.0);
}

TEST(WitnessTest, PathIsNotSplit) {
  RunResult r = RunTool({"witness", "--class", "split", "--no-timing"},
                    WriteGraph6(testing::Path(5)) + "\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(
      r.out,
      R"j({"input":"stdin:1","class":"split","verdict":"reject","witness":{"type":"a-pair","h":2,"x":[0,1],"y":[3,4]},"millis":0.0})j"
      "\n");
}

TEST(WitnessTest, ExtendedChairIsItsOwnSmeWitness) {
  RunResult r = RunTool({"witness", "--class", "sme", "--emit", "text", "--no-timing"},
                    WriteGraph6(*Fixture("extended-chair")) + "\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "stdin:1 sme no pattern name=extended-chair map=[0,1,2,3,4,5]\n");
}

TEST(WitnessTest, PendantC4HasAHoleForKgs2) {
  RunResult r = RunTool({"witness", "--class", "kgs(2)", "--no-timing"},
                    WriteGraph6(*Fixture("pendant-c4")) + "\n");
  EXPECT_EQ(r.code, 0);
  json line = json::parse(r.out);
  EXPECT_EQ(line["witness"]["type"], "hole");
  std::vector<int> cycle = line["witness"]["cycle"].get<std::vector<int>>();
  std::sort(cycle.begin(), cycle.end());
  EXPECT_THAT(cycle, ElementsAre(0, 1, 2, 3));
}

TEST(WitnessTest, AcceptedGraphExitsWithMismatch) {
  RunResult r = RunTool({"witness", "--class", "split"}, WriteGraph6(testing::Complete(3)) + "\n");
  EXPECT_EQ(r.code, kExitMismatch);
  EXPECT_EQ(json::parse(r.out)["verdict"], "accept");
  EXPECT_THAT(r.err, HasSubstr("graph is split"));
}

TEST(WitnessTest, UnknownClassIsAUsageError) {
  RunResult r = RunTool({"witness", "--class", "perfect"}, "C~\n");
  EXPECT_EQ(r.code, kExitParseError);
}

TEST(GenerateTest, Models) {
  EXPECT_EQ(RunTool({"generate", "path", "-n", "4"}).out, WriteGraph6(testing::Path(4)) + "\n");
  EXPECT_EQ(RunTool({"generate", "cycle", "-n", "5"}).out, WriteGraph6(testing::Cycle(5)) + "\n");
  EXPECT_EQ(RunTool({"generate", "complete", "-n", "4"}).out, "C~\n");
  EXPECT_EQ(RunTool({"generate", "butterfly"}).out, "DxK\n");
  EXPECT_EQ(RunTool({"generate", "chordal", "-n", "30", "--seed", "9", "--density", "0.4"}).out,
            WriteGraph6(RandomChordal(30, 0.4, 9)) + "\n");
  RunResult star = RunTool({"generate", "star", "-n", "4", "--format", "edgelist"});
  EXPECT_EQ(star.code, 0);
  EXPECT_EQ(star.out, WriteEdgeList(testing::Star(3)));
  EXPECT_EQ(ParseEdgeList(star.out).num_edges(), 3);
}

TEST(GenerateTest, CountAdvancesTheSeed) {
  std::vector<std::string> lines =
      Lines(RunTool({"generate", "chordal", "-n", "20", "--seed", "5", "--count", "3"}).out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[2], WriteGraph6(RandomChordal(20, 0.3, 7)));
}

TEST(GenerateTest, Errors) {
  EXPECT_EQ(RunTool({"generate", "petersen"}).code, kExitParseError);
  EXPECT_EQ(RunTool({"generate", "cycle", "-n", "2"}).code, kExitParseError);
  EXPECT_EQ(RunTool({"generate", "chordal", "--density", "1.5"}).code, kExitParseError);
}

TEST(FixtureTest, AllNamesResolve) {
  for (const Pattern& p : Catalog()) {
    std::optional<Graph> g = Fixture(p.name);
    ASSERT_TRUE(g.has_value()) << p.name;
    EXPECT_EQ(WriteGraph6(*g), WriteGraph6(p.graph));
  }
  EXPECT_EQ(WriteGraph6(*Fixture("pendant-c4")), WriteGraph6(testing::PendantC4()));
  EXPECT_FALSE(Fixture("nothing").has_value());
}

TEST(VerifyTheoremsTest, SmallCorpusIsClean) {
  RunResult r = RunTool({"verify-theorems", "--max-n", "4", "--h", "1,2", "--jobs", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::vector<std::string> lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_THAT(lines[0], HasSubstr("T1 graphs=76 "));
  EXPECT_THAT(lines[2], HasSubstr("T3(h=1) "));
  EXPECT_THAT(lines[3], HasSubstr("T3(h=2) "));
  EXPECT_EQ(lines[5], "clean");
}

TEST(VerifyTheoremsTest, AllTheoremsUpToFive) {
  RunResult r = RunTool({"verify-theorems", "--max-n", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_THAT(r.out, HasSubstr("T1 graphs=1100 "));
}

TEST(VerifyTheoremsTest, SecondGoodCliqueFamilyUpToSix) {
  RunResult r = RunTool({"verify-theorems", "--max-n", "6", "--theorems", "T3", "--h", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_THAT(r.out, HasSubstr("T3(h=2) graphs=19049 "));
}

TEST(VerifyTheoremsTest, SelectedTheoremsOnly) {
  RunResult r = RunTool({"verify-theorems", "--max-n", "4", "--theorems", "T4,T3(h=3)"});
  EXPECT_EQ(r.code, 0);
  std::vector<std::string> lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_THAT(lines[0], HasSubstr("T4 "));
  EXPECT_THAT(lines[1], HasSubstr("T3(h=3) "));
}

TEST(VerifyTheoremsTest, GuardAndUsageErrors) {
  EXPECT_EQ(RunTool({"verify-theorems", "--max-n", "8"}).code, kExitGuard);
  EXPECT_EQ(RunTool({"verify-theorems", "--theorems", "T9"}).code, kExitParseError);
  EXPECT_EQ(RunTool({"verify-theorems", "--graph6", "/nonexistent.g6"}).code, kExitParseError);
}

TEST(VerifyTheoremsTest, Graph6Corpus) {
  TempFile file("DxK\nC~\nDhc\n");
  RunResult r = RunTool({"verify-theorems", "--graph6", file.path(), "--theorems", "T1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_THAT(r.out, HasSubstr("T1 graphs=3 "));
}

TEST(BenchTest, ReportsRowsAndSlope) {
  RunResult r = RunTool({"bench", "--n", "200,400,800", "--repeat", "2", "--emit", "json"});
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 3u);
  EXPECT_EQ(doc["rows"][0]["n"], 200);
  EXPECT_EQ(doc["rows"][0]["m"], RandomChordal(200, 0.3, 1).num_edges());
  EXPECT_TRUE(doc.contains("slope"));
  EXPECT_EQ(RunTool({"bench", "--n", "0"}).code, kExitParseError);
  RunResult single = RunTool({"bench", "--n", "1"});
  EXPECT_EQ(single.code, 0);
  EXPECT_THAT(single.out, HasSubstr("n=1 m=0 cliques=1 "));
  EXPECT_THAT(single.out, ::testing::Not(HasSubstr("slope")));
}

TEST(BenchTest, LogLogSlope) {
  std::vector<BenchRow> rows{{10, 10, 0, 1.0, false}, {100, 100, 0, 100.0, false}};
  EXPECT_NEAR(LogLogSlope(rows), 1.0, 1e-12);
  rows.push_back({1000, 1000, 0, 100000.0, false});
  EXPECT_NEAR(LogLogSlope(rows), 1.25, 1e-12);
  EXPECT_TRUE(std::isnan(LogLogSlope({{5, 0, 0, 1.0, false}, {10, 9, 0, 2.0, false}})));
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunTool({}).code, kExitParseError);
  EXPECT_EQ(RunTool({"frobnicate"}).code, kExitParseError);
  EXPECT_EQ(RunTool({"classify", "--emit", "xml"}).code, kExitParseError);
  EXPECT_EQ(RunTool({"classify", "-k", "-1"}).code, kExitParseError);
  RunResult help = RunTool({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_THAT(help.out, HasSubstr("verify-theorems"));
}

TEST(ReportTest, JsonSchema) {
  Graph g = testing::Butterfly();
  std::vector<ClassVerdict> verdicts = chordsplit::Classify(g, {1, 2});
  ASSERT_EQ(verdicts.size(), 5u);
  for (const ClassVerdict& v : verdicts) {
    json line = json::parse(JsonLine("x", v, true));
    std::vector<std::string> keys;
    for (const auto& [key, value] : line.items()) keys.push_back(key);
    EXPECT_THAT(keys, ElementsAre("input", "class", "verdict",
                                  v.accepted ? "certificate" : "witness", "millis"));
    EXPECT_TRUE(line["millis"].is_number());
    EXPECT_GE(line["millis"].get<double>(), 0.0);
  }
  EXPECT_EQ(ToJson(RejectionWitness(APairWitness{3, {0, 1, 2}, {3, 4, 5}})).dump(),
            R"j({"type":"a-pair","h":3,"x":[0,1,2],"y":[3,4,5]})j");
  EXPECT_EQ(ToJson(SmePartition{{1, 2}, {0}, {{3, 4}}}).dump(),
            R"j({"type":"sme-partition","clique":[1,2],"independent":[0],"matching":[[3,4]]})j");
}

TEST(ReportTest, DecideMatchesClassify) {
  Graph g = RandomChordal(40, 0.5, 11);
  for (const ClassVerdict& v : chordsplit::Classify(g, {2})) {
    ClassVerdict single = Decide(g, v.cls);
    EXPECT_EQ(single.accepted, v.accepted);
    EXPECT_EQ(single.evidence, v.evidence);
  }
}

}  // namespace
}  // namespace chordsplit
