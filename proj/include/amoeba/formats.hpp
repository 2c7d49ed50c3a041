#ifndef AMOEBA_FORMATS_HPP
#define AMOEBA_FORMATS_HPP

#include <string>

#include "amoeba/graph.hpp"

namespace amoeba {

// graph6, the compact ASCII encoding used by the usual enumeration tools.
// The optional ">>graph6<<" header is accepted on input and never emitted.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Plain edge-list text: first line "n m", then m lines "i j" (1-indexed).
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// Reads either format: a leading "n m" integer pair means edge list,
// anything else is treated as graph6.
Graph parse_graph_auto(const std::string& text);

} // namespace amoeba

#endif // AMOEBA_FORMATS_HPP
