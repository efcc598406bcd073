#include "doctest.h"

#include "permdual/render.hpp"
#include "permdual/text.hpp"
#include "support.hpp"

using namespace permdual;
using testsupport::read_fixture;

TEST_CASE("sequence text round-trips exactly") {
  std::string text = "n=4; (3,4) (1,3) (1,2) (3,4) (2,3)";
  TranspositionSequence s = parse_sequence(text);
  CHECK(format_sequence(s) == text);
  CHECK(s.size() == 5);
  CHECK(s.n() == 4);

  CHECK(format_sequence(parse_sequence("n=7;")) == "n=7;");
  // display order of a pair is cosmetic
  CHECK(format_sequence(parse_sequence("n=4; (4,3)")) == "n=4; (3,4)");

  CHECK_THROWS_AS(parse_sequence("n=4 (1,2)"), Error);
  CHECK_THROWS_AS(parse_sequence("n=4; (1,1)"), Error);
  CHECK_THROWS_AS(parse_sequence("n=4; (1,5)"), Error);
  CHECK_THROWS_AS(parse_sequence("m=4;"), Error);
}

TEST_CASE("graph text round-trips") {
  std::string text = read_fixture("fig2.cover");
  ParsedCover cover = parse_cover(text);
  CHECK(cover.graph.edge_count() == 5);
  CHECK(cover.trails.size() == 4);

  std::string graph_text = format_graph(cover.graph);
  CHECK(parse_graph(graph_text) == cover.graph);
  CHECK(graph_text.substr(0, 11) == "n=4; m=5;\n1");

  CHECK_THROWS_AS(parse_graph("n=2; m=1;\n2: 1 2\n"), Error);
  CHECK_THROWS_AS(parse_graph("n=2; m=1;\n1: 1 1\n"), Error);
}

TEST_CASE("trail lines round-trip") {
  Trail t{{3, 4, 3, 2}, {1, 4, 5}};
  std::string line = "3: 3 -1- 4 -4- 3 -5- 2";
  CHECK(format_trail(t) == line);
  CHECK(parse_trail(line) == t);
  Trail trivial{{7}, {}};
  CHECK(format_trail(trivial) == "7: 7");
  CHECK(parse_trail("7: 7") == trivial);
  CHECK_THROWS_AS(parse_trail("3: 4"), Error);
}

TEST_CASE("cover files round-trip through the validator") {
  ParsedCover parsed = parse_cover(read_fixture("fig2.cover"));
  TrailDoubleCover cover = TrailDoubleCover::from_trails(parsed.graph, parsed.trails);
  ParsedCover again = parse_cover(format_cover(cover));
  CHECK(again.graph == parsed.graph);
  CHECK(TrailDoubleCover::from_trails(again.graph, again.trails) == cover);
  CHECK_THROWS_AS(parse_cover("n=1; m=0;\n"), Error);
}

TEST_CASE("tree text round-trips") {
  std::string text = read_fixture("fig8_s.tree");
  VertexLabeledTree t = parse_tree(text);
  CHECK(t.n == 8);
  CHECK(t.edges.size() == 7);
  CHECK(format_tree(t) + "\n" == text);
  CHECK_THROWS_AS(parse_tree("n=3; {1,2}"), Error);  // not a tree
}

TEST_CASE("dot output mentions every labeled edge and arc") {
  LabeledMultigraph g = parse_cover(read_fixture("fig2.cover")).graph;
  std::string dot = graph_to_dot(g);
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("3 -- 4 [label=\"1\"]") != std::string::npos);
  CHECK(dot.find("2 -- 3 [label=\"5\"]") != std::string::npos);

  EdgeDigraph d = edge_digraph(greedy_trail_cover(g));
  std::string digraph = edge_digraph_to_dot(d);
  CHECK(digraph.find("digraph D {") == 0);
  CHECK(digraph.find("1 -> 2;") != std::string::npos);
  CHECK(digraph.find("4 -> 5;") != std::string::npos);
}

TEST_CASE("svg output draws points and chords") {
  TranspositionSequence t = testsupport::fixture_sequence("fig9.seq");
  CircleChordDiagram d = CircleChordDiagram::from_tree_sequence(t);
  std::string svg = chord_diagram_to_svg(d);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // 8 chord lines plus one label circle each, 9 point dots
  size_t lines = 0;
  for (size_t pos = svg.find("<line"); pos != std::string::npos;
       pos = svg.find("<line", pos + 1))
    ++lines;
  CHECK(lines == 8);

  LabeledMultigraph dual = circle_dual(t);
  std::string overlay = chord_diagram_to_svg(d, &dual);
  CHECK(overlay.size() > svg.size());
  CHECK(overlay.find("steelblue") != std::string::npos);
}
