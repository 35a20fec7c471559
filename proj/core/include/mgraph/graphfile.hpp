#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgraph/graph.hpp"

namespace mgraph {

/// Parsed form of the line-based graph format:
///   vertex <id>
///   edge <id> <tail> <head> <len p[/q]>
///   divisor <vertex> <p[/q]>
///   component <vertex> genus=<int>
///   curve-genus <int>
/// '#' starts a comment; blank lines are ignored.
struct GraphFile {
  MetrizedGraph graph;
  VertexDivisor divisor;   // zero when no divisor lines are present
  bool has_divisor = false;
  std::vector<int> component_genus;  // per vertex; 0 when not declared
  bool has_component_genus = false;
  std::optional<int> curve_genus;
};

/// Throws ParseError (with line number), UnknownVertex, DuplicateId, and the
/// MetrizedGraph construction errors.
GraphFile parse_graph_file(const std::string& text);

/// Canonical re-rendering; parse(to_text(f)) reproduces f and to_text is a
/// fixpoint on its own output.
std::string to_text(const GraphFile& file);

}  // namespace mgraph
