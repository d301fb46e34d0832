#pragma once

#include <string>

#include "chroma/graph.hpp"

namespace chroma {

// Edge-list text format: first line "n m", then m lines "u v". Emission is
// canonical: u < v and lines sorted lexicographically. Parsing accepts either
// endpoint order and rejects loops, duplicates and out-of-range vertices with
// the offending line number.
Graph parse_edgelist(const std::string& text);
std::string emit_edgelist(const Graph& g);

// Standard graph6 ASCII encoding, one graph per string (an optional
// ">>graph6<<" prefix is ignored).
Graph parse_graph6(const std::string& line);
std::string emit_graph6(const Graph& g);

}  // namespace chroma
