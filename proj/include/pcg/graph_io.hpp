#pragma once

#include "pcg/graph.hpp"

#include <string>
#include <string_view>

namespace pcg {

enum class GraphFormat { Graph6, EdgeList };

/// graph6: the standard bit-packed format. An optional ">>graph6<<" header
/// and trailing whitespace are accepted. Vertices are labeled "v0".."v{n-1}".
Graph read_graph6(std::string_view text);
/// Emits the graph6 encoding of `g` in its vertex order (no header, no newline).
std::string write_graph6(const Graph& g);

/// Edge list: one "u v" pair per line, '#' comment lines ignored, and an
/// optional leading header "n=<count> labels=<comma-list>" that declares
/// vertices (in order) so isolated vertices survive. When present, <count>
/// must equal the total number of vertices.
Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);

/// ".g6" paths and ">>graph6<<" content are graph6; everything else is an edge list.
GraphFormat sniff_format(std::string_view path, std::string_view content);

}  // namespace pcg
