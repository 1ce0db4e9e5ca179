#include "chordsplit/graph_io.h"

#include <random>
#include <string>

#include "chordsplit/oracle.h"
#include "gtest/gtest.h"
#include "test_graphs.h"

namespace chordsplit {
namespace {

using testing::Butterfly;
using testing::Complete;
using testing::Cycle;
using testing::Path;

std::vector<int> Degrees(const Graph& g) {
  std::vector<int> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) out.push_back(g.degree(v));
  return out;
}

// Records below were produced by networkx.to_graph6_bytes.
TEST(Graph6Test, KnownEncodings) {
  EXPECT_EQ(WriteGraph6(Cycle(4)), "Cl");
  EXPECT_EQ(WriteGraph6(Path(4)), "Ch");
  EXPECT_EQ(WriteGraph6(Complete(3)), "Bw");
  EXPECT_EQ(WriteGraph6(Butterfly()), "DxK");
}

TEST(Graph6Test, DecodeCycle) {
  Graph g = ParseGraph6("Cl");
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 4);
  EXPECT_EQ(Degrees(g), (std::vector<int>{2, 2, 2, 2}));
}

TEST(Graph6Test, DecodePath) {
  EXPECT_EQ(Degrees(ParseGraph6(WriteGraph6(Path(4)))), (std::vector<int>{1, 2, 2, 1}));
}

TEST(Graph6Test, RoundTripRecord) {
  Graph g = ParseGraph6("D?{");
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_EQ(g.num_edges(), 4);
  EXPECT_EQ(WriteGraph6(g), "D?{");
}

TEST(Graph6Test, SingleVertex) {
  Graph g = ParseGraph6("@");
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_EQ(g.num_edges(), 0);
}

TEST(Graph6Test, EmptyGraph) {
  EXPECT_EQ(WriteGraph6(Graph()), "?");
  EXPECT_EQ(ParseGraph6("?").num_vertices(), 0);
}

TEST(Graph6Test, HeaderAndLineEndings) {
  EXPECT_EQ(ParseGraph6(">>graph6<<Cl\r\n"), Cycle(4));
}

TEST(Graph6Test, LongSizeField) {
  Graph p70 = Path(70);
  std::string record = WriteGraph6(p70);
  // networkx: "~?@EhCGG..." with 70 * 69 / 2 bits in 403 groups.
  EXPECT_EQ(record.substr(0, 8), "~?@EhCGG");
  EXPECT_EQ(record.size(), 4u + 403u);
  EXPECT_EQ(ParseGraph6(record), p70);
}

TEST(Graph6Test, Malformed) {
  EXPECT_THROW(ParseGraph6(""), ParseError);
  EXPECT_THROW(ParseGraph6("~?"), ParseError);         // truncated size field
  EXPECT_THROW(ParseGraph6("C"), ParseError);          // adjacency missing
  EXPECT_THROW(ParseGraph6("Cl?"), ParseError);        // trailing garbage
  EXPECT_THROW(ParseGraph6("C l"), ParseError);        // space is below 63
  EXPECT_THROW(ParseGraph6("C\x7f"), ParseError);      // above 126
  EXPECT_THROW(ParseGraph6("Bx"), ParseError);         // padding bit set
}

TEST(Graph6Test, RoundTripAllSmallLabeledGraphs) {
  for (int n = 0; n <= 5; ++n) {
    EnumerateLabeledGraphs(n, [](uint64_t, const Graph& g) {
      EXPECT_EQ(ParseGraph6(WriteGraph6(g)), g);
    });
  }
}

TEST(Graph6Test, RoundTripRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = testing::RandomGraph(static_cast<int>(rng() % 11), 0.4, rng);
    EXPECT_EQ(ParseGraph6(WriteGraph6(g)), g);
  }
}

TEST(EdgeListTest, WithHeader) {
  Graph g = ParseEdgeList("5 2\n0 1\n1 2\n");
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_EQ(g.num_edges(), 2);
}

TEST(EdgeListTest, WithoutHeader) {
  Graph g = ParseEdgeList("# butterfly\n0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n");
  EXPECT_EQ(g, Butterfly());
}

TEST(EdgeListTest, RoundTrip) {
  EXPECT_EQ(ParseEdgeList(WriteEdgeList(Butterfly())), Butterfly());
  Graph isolated = Graph::FromEdges(4, std::vector<Edge>{{0, 1}});
  EXPECT_EQ(ParseEdgeList(WriteEdgeList(isolated)), isolated);
}

TEST(EdgeListTest, Errors) {
  try {
    ParseEdgeList("0 1\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(ParseEdgeList("0 1 2\n"), ParseError);
  EXPECT_THROW(ParseEdgeList("0 1\n2 2\n"), ParseError);
  EXPECT_THROW(ParseEdgeList("-1 2\n"), ParseError);
}

}  // namespace
}  // namespace chordsplit
