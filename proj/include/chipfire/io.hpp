#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "chipfire/graph.hpp"

namespace chipfire {

/// Graph text format:
///   line 1: `digraph N` or `undirected N`
///   then `u v [k]` lines (k parallel arcs, default 1); under `undirected`
///   each line adds both directions. `#` starts a comment, blanks ignored.
MultiDigraph parse_graph(std::istream& in);
MultiDigraph parse_graph(const std::string& text);
MultiDigraph load_graph(const std::string& path);

/// Round-trippable text for a graph; emits `undirected` form when the graph
/// was built from an undirected edge list.
std::string format_graph(const MultiDigraph& g);

/// `u v k` lines for an arc subset, matching the graph file grammar.
std::string format_arc_lines(const ArcSubset& t);

/// Comma-separated integers, e.g. "1,0,0,3". expected_n < 0 skips the check.
ChipDistribution parse_distribution(std::string_view csv, int expected_n = -1);

}  // namespace chipfire
