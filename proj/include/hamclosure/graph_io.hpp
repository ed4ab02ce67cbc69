#pragma once

#include <string>
#include <string_view>

#include "hamclosure/graph.hpp"

namespace hamclosure {

/// Decodes one graph6 line. An optional ">>graph6<<" header is accepted and
/// trailing whitespace is ignored. Throws ParseError with the offending offset.
Graph parse_graph6(std::string_view text);
/// Canonical graph6 encoding (no header, no newline).
std::string emit_graph6(const Graph& g);

/// "n m" header followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

std::string emit_dot(const Graph& g, std::string_view name = "G");

/// Sniffs the format: text containing a newline-separated "n m" header is an
/// edge list, anything else is graph6.
Graph parse_graph_auto(std::string_view text);

}  // namespace hamclosure
