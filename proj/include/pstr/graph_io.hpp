#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "pstr/graph.hpp"

namespace pstr {

enum class GraphFormat { dimacs, edgelist };

std::optional<GraphFormat> format_from_name(std::string_view name);
std::string_view format_name(GraphFormat f);

/// Guesses the format from the first non-comment line: a "p ..." header means
/// DIMACS, anything else an edge list.
GraphFormat detect_format(std::string_view text);

/**
 * Edge list: "n m" header, then m lines "u v" (0-based). Lines starting with
 * '#' are comments.
 * DIMACS: "c" comment lines, "p edge N M" header, "e u v" lines (1-based).
 *
 * Throws GraphError on a malformed header, a wrong edge-line count, an id
 * out of range or a self-loop. Repeated edges collapse.
 */
Graph parse_graph(std::string_view text, GraphFormat format);

/// Serialization with edges sorted; parse_graph(write_graph(g, f), f) == g.
std::string write_graph(const Graph& g, GraphFormat format);

/// Reads a whole file; throws GraphError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace pstr
