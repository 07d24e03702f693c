#pragma once

#include "universo/graph.hpp"

#include <string>
#include <string_view>

namespace universo {

/// graph6 encoding (McKay's format). Supports n <= 258047.
std::string to_graph6(const Graph& g);

/// Parses one graph6 line; tolerates the optional ">>graph6<<" header and
/// trailing whitespace. Throws parameter_error on malformed input.
Graph from_graph6(std::string_view text, std::string name = {});

Graph read_graph6_file(const std::string& path);
void write_graph6_file(const Graph& g, const std::string& path);

} // namespace universo
