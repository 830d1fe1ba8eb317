#include <gtest/gtest.h>

#include <sstream>

#include "feynman/generate.hpp"
#include "feynman/graph_json.hpp"
#include "support/corpus.hpp"

namespace feynman {
namespace {

Errc parse_error(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::NotConnected;
}

TEST(GraphJson, RoundTripsEveryBuiltin) {
  for (const auto& [name, spec] : testing::corpus()) {
    const std::string text = graph_to_json(spec).dump();
    const GraphSpec back = parse_graph(text);
    ASSERT_EQ(back.vertices.size(), spec.vertices.size()) << name;
    ASSERT_EQ(back.edges.size(), spec.edges.size()) << name;
    for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
      EXPECT_EQ(back.vertices[i].position, spec.vertices[i].position) << name;
    }
    for (std::size_t i = 0; i < spec.edges.size(); ++i) {
      EXPECT_EQ(back.edges[i].waypoints, spec.edges[i].waypoints) << name;
      EXPECT_EQ(back.edges[i].from, spec.edges[i].from) << name;
    }
    EXPECT_EQ(graph_to_json(back).dump(), text) << name;
  }
}

TEST(GraphJson, WaypointsAreOptional) {
  const auto spec = parse_graph(
      R"({"vertices":[{"id":0,"x":0,"y":0},{"id":1,"x":1,"y":0},{"id":2,"x":0,"y":1}],
          "edges":[{"id":0,"from":0,"to":1},{"id":1,"from":1,"to":2},{"id":2,"from":2,"to":0}]})");
  EXPECT_EQ(build_graph(spec).num_oriented(), 6u);
}

TEST(GraphJson, RejectsUnknownKeys) {
  EXPECT_EQ(parse_error(R"({"vertices":[],"edges":[],"name":"x"})"), Errc::ParseError);
  EXPECT_EQ(parse_error(R"({"vertices":[{"id":0,"x":0,"y":0,"z":1}],"edges":[]})"), Errc::ParseError);
  EXPECT_EQ(parse_error(R"({"vertices":[],"edges":[{"id":0,"from":0,"to":0,"weight":2}]})"), Errc::ParseError);
}

TEST(GraphJson, RejectsMalformedInput) {
  EXPECT_EQ(parse_error("{"), Errc::ParseError);
  EXPECT_EQ(parse_error("[]"), Errc::ParseError);
  EXPECT_EQ(parse_error(R"({"vertices":[]})"), Errc::ParseError);
  EXPECT_EQ(parse_error(R"({"vertices":[{"id":"a","x":0,"y":0}],"edges":[]})"), Errc::ParseError);
  EXPECT_EQ(parse_error(R"({"vertices":[],"edges":[{"id":0,"from":0,"to":0,"waypoints":[[1]]}]})"),
            Errc::ParseError);
}

TEST(GraphJson, DataFileIsTheTripledSquare) {
  const auto g = build_graph(testing::tripled_square());
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 6u);
}

}  // namespace
}  // namespace feynman
