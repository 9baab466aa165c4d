#pragma once

#include <stdexcept>
#include <string>

#include "clustersync/graph.hpp"

namespace clustersync {

/// Raised on malformed graph or config files; the message cites the
/// offending line (for syntax errors) or field (for structural errors).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parses the graph file format: an object with fields
///   m        vertex count (integer)
///   edges    list of [i, j] pairs, 1-based
///   clusters list of lists of 1-based vertex ids
/// Edge pairs are normalized to (min,max); duplicates and self-loops are
/// kept so validate() can report them.
ClusteredGraph parse_graph(const std::string& text);

/// Reads and parses a graph file; errors are prefixed with the path.
ClusteredGraph load_graph(const std::string& path);

std::string serialize_graph(const ClusteredGraph& graph);

void save_graph(const ClusteredGraph& graph, const std::string& path);

}  // namespace clustersync
