#include <gtest/gtest.h>

#include "turan/formats.hpp"
#include "turan/random.hpp"

using namespace turan;

TEST(Graph6, KnownStrings) {
  const auto k3 = parse_graph6("Bw");
  EXPECT_EQ(k3.order(), 3);
  EXPECT_EQ(k3.size(), 3);

  const auto empty2 = parse_graph6("A?");
  EXPECT_EQ(empty2.order(), 2);
  EXPECT_EQ(empty2.size(), 0);

  // Bg is the path 0-1-2 in column order: x(0,1)=1, x(0,2)=0, x(1,2)=1.
  const auto p3 = parse_graph6("Bg");
  EXPECT_TRUE(p3.adjacent(0, 1));
  EXPECT_FALSE(p3.adjacent(0, 2));
  EXPECT_TRUE(p3.adjacent(1, 2));

  EXPECT_EQ(parse_graph6("@").order(), 1);
  EXPECT_EQ(parse_graph6("?").order(), 0);
}

TEST(Graph6, HeaderAndTrailingNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n").size(), 3);
  EXPECT_EQ(parse_graph6("Bw\r\n").size(), 3);
}

TEST(Graph6, ErrorsNameTheByteOffset) {
  try {
    parse_graph6("D?{!");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_NE(std::string(e.what()).find("offset 3"), std::string::npos);
  }
  EXPECT_THROW(parse_graph6("D?"), ParseError);     // truncated
  EXPECT_THROW(parse_graph6("Bww"), ParseError);    // trailing data
  EXPECT_THROW(parse_graph6("Bx"), ParseError);     // nonzero padding bits
  EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(Graph6, LongHeaderRoundTrip) {
  // n = 70 needs the four-byte header form.
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < 70; i += 3) e.emplace_back(i, i + 1);
  const auto g = WeightedGraph::unweighted(70, e);
  const auto s = to_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, RoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_gnp(1 + static_cast<int>(seed % 17), 0.4, seed);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
}

TEST(EdgeList, ParsesCommentsAndWeights) {
  const auto g = parse_weighted_edgelist("# comment\n3 2\n0 1 1.5\n# another\n2 1 -0.25\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_DOUBLE_EQ(g.weight(1, 2), -0.25);
  EXPECT_DOUBLE_EQ(g.weight(0, 1), 1.5);
}

TEST(EdgeList, ErrorsNameTheLine) {
  auto line_of = [](const char* text) {
    try {
      parse_weighted_edgelist(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("3 2\n0 1 1\n0 1 2\n"), 3u);  // duplicate
  EXPECT_EQ(line_of("3 1\n0 0 1\n"), 2u);         // self-loop
  EXPECT_EQ(line_of("3 1\n0 x 1\n"), 2u);         // bad vertex
  EXPECT_EQ(line_of("3 1\n0 5 1\n"), 2u);         // out of range
  EXPECT_EQ(line_of("3 2\n0 1 1\n"), 1u);         // count mismatch
  EXPECT_EQ(line_of("# c\n3 1\n0 1 0\n"), 3u);    // zero weight
  try {
    parse_weighted_edgelist("2 1\n0 1 0.0\n");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("structural ambiguity"), std::string::npos);
  }
}

TEST(EdgeList, RoundTripIsBitExact) {
  const auto g = randomize_weights(random_gnp(9, 0.5, 3), 0.1, 2.0, true, 11);
  EXPECT_EQ(parse_weighted_edgelist(to_weighted_edgelist(g)), g);
}

TEST(JsonGraph, RoundTripAndFieldOrder) {
  const WeightedGraph g(3, {{0, 2, 0.1}, {1, 2, -3.0}});
  const auto j = graph_to_json(g);
  EXPECT_EQ(j.begin().key(), "n");
  EXPECT_EQ(parse_graph_json(j.dump()), g);
  EXPECT_THROW(parse_graph_json("{\"n\": 2, \"edges\": [[0, 1]]}"), ParseError);
  EXPECT_THROW(parse_graph_json("{\"n\": 2, \"edges\": [[0, 1, 0]]}"), ParseError);
  EXPECT_THROW(parse_graph_json("{\"n\": 2"), ParseError);
}
