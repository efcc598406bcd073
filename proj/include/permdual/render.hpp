#pragma once

#include <string>

#include "permdual/chord.hpp"
#include "permdual/graph.hpp"
#include "permdual/trails.hpp"

namespace permdual {

std::string graph_to_dot(const LabeledMultigraph& g, const std::string& name = "G");
std::string edge_digraph_to_dot(const EdgeDigraph& d, const std::string& name = "D");

// Circle, labeled points, chords with circled labels; when dual is given,
// overlays its vertices (one per region, near its arc) and edges.
std::string chord_diagram_to_svg(const CircleChordDiagram& d,
                                 const LabeledMultigraph* dual = nullptr);

}  // namespace permdual
