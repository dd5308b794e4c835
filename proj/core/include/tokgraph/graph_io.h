#ifndef TOKGRAPH_GRAPH_IO_H_
#define TOKGRAPH_GRAPH_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tokgraph/graph.h"

namespace tokgraph {

// graph6: size header N(n) then the upper triangle of the adjacency matrix
// column by column ((0,1), (0,2), (1,2), (0,3), ...), packed big-endian into
// 6-bit groups offset by 63. Supports n < 2^36; no trailing newline.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header and one trailing newline. Throws
// ParseError carrying the byte offset of the first bad byte.
Graph graph6_decode(std::string_view text);

// Plain edge list: "n m" on the first line, then m lines "u v" (0-based,
// whitespace separated). Blank lines and lines starting with '#' are
// skipped.
std::string edge_list_encode(const Graph& g);
Graph edge_list_decode(std::string_view text);

// Graphviz DOT. When `labels` is non-empty it must have one entry per
// vertex and is used as the node label.
std::string dot_export(const Graph& g, const std::vector<std::string>& labels = {});

}  // namespace tokgraph

#endif  // TOKGRAPH_GRAPH_IO_H_
