#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permdual/graph.hpp"
#include "permdual/mindbody.hpp"
#include "permdual/perm.hpp"
#include "permdual/trails.hpp"
#include "permdual/tree.hpp"

namespace permdual {

// Sequence: "n=4; (3,4) (1,3) (1,2) (3,4) (2,3)"
std::string format_sequence(const TranspositionSequence& s);
TranspositionSequence parse_sequence(std::string_view text);

// Graph: "n=4; m=5;" then one line "k: x y" per edge label k.
std::string format_graph(const LabeledMultigraph& g);
LabeledMultigraph parse_graph(std::string_view text);

// Tree: "n=8; {2,4} {3,4} ..."
std::string format_tree(const VertexLabeledTree& t);
VertexLabeledTree parse_tree(std::string_view text);

// Trail line: "start: v1 -e1- v2 -e2- ..."; a trivial trail is "v: v".
std::string format_trail(const Trail& t);
Trail parse_trail(std::string_view line);

// Cover file: the graph section, a "trails:" line, then one trail line per
// vertex. Parsing does not validate the double-cover conditions.
struct ParsedCover {
  LabeledMultigraph graph;
  std::vector<Trail> trails;
};

std::string format_cover(const TrailDoubleCover& c);
ParsedCover parse_cover(std::string_view text);

std::string format_assignment(const MindBodyAssignment& a);

std::string format_cycles(const Permutation& p);
Permutation parse_cycles(std::string_view text, int n);

}  // namespace permdual
