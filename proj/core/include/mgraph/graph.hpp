#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mgraph/rational.hpp"

namespace mgraph {

/// Edge of a metrized graph. Orientation (tail -> head) is bookkeeping for
/// arc-length coordinates only; the metric structure is undirected.
struct Edge {
  std::string id;
  int tail = -1;
  int head = -1;
  Rat length;

  bool is_loop() const { return tail == head; }
};

struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
  Rat length;
};

/// A compact connected metrized graph: an ordered vertex set plus edges with
/// strictly positive rational lengths. Loops and parallel edges are allowed;
/// a loop counts twice toward the valence of its vertex. Immutable after
/// construction.
class MetrizedGraph {
 public:
  /// Placeholder (no vertices, no edges); assign a built graph before use.
  MetrizedGraph() = default;

  /// Validates and builds. Throws EmptyGraph (no edges), NonpositiveLength,
  /// UnknownVertex (edge endpoint not declared), DuplicateId, or
  /// DisconnectedGraph. Input order of vertices and edges is preserved.
  static MetrizedGraph build(std::vector<std::string> vertices,
                             std::vector<EdgeSpec> edges);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(std::string_view id) const;
  bool has_edge(std::string_view id) const;
  int vertex_index(std::string_view id) const;  // throws UnknownVertex
  int edge_index(std::string_view id) const;    // throws UnknownEdge

  /// Number of edge branches at v; a loop contributes 2.
  int valence(int v) const { return valence_[v]; }

  Rat total_length() const;

  /// First Betti number |E| - |V| + 1.
  int genus() const { return edge_count() - vertex_count() + 1; }

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<int> valence_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
};

/// A point of the graph: either a vertex, or an interior point of an edge at
/// arc-length `offset` from the edge's tail (0 < offset < length; the two
/// boundary offsets are represented as the endpoint vertices).
struct PointLocation {
  static PointLocation at_vertex(std::string vertex_id) {
    return PointLocation{true, std::move(vertex_id), Rat(0)};
  }
  static PointLocation on_edge(std::string edge_id, Rat offset) {
    return PointLocation{false, std::move(edge_id), std::move(offset)};
  }

  bool is_vertex = true;
  std::string id;  // vertex id or edge id
  Rat offset;      // meaningful only when !is_vertex
};

/// Throws UnknownVertex/UnknownEdge/BadPoint when the point does not name a
/// valid location of g.
void validate_point(const MetrizedGraph& g, const PointLocation& p);

struct Subdivision {
  MetrizedGraph graph;
  /// Vertex id in `graph` realizing each requested point, in input order.
  std::vector<std::string> point_vertex;
};

/// Refines the graph so every requested point becomes a vertex. Vertex points
/// map to themselves; interior points split their edge. Original vertices
/// keep their indices (new ones are appended), total length and genus are
/// unchanged, and the result is deterministic in the input ordering.
Subdivision subdivide_at(const MetrizedGraph& g,
                         const std::vector<PointLocation>& points);

/// Splits a single edge at one interior point.
/// Throws PointIsVertex when the point is a vertex.
std::pair<MetrizedGraph, std::string> subdivide(const MetrizedGraph& g,
                                                const PointLocation& p);

/// Rational coefficients on the vertex set of one graph (absent = 0).
class VertexDivisor {
 public:
  VertexDivisor() = default;
  explicit VertexDivisor(const MetrizedGraph& g)
      : coeff_(static_cast<size_t>(g.vertex_count()), Rat(0)) {}
  explicit VertexDivisor(std::vector<Rat> coeff) : coeff_(std::move(coeff)) {}

  int size() const { return static_cast<int>(coeff_.size()); }
  const Rat& operator[](int v) const { return coeff_[v]; }
  Rat& operator[](int v) { return coeff_[v]; }
  const std::vector<Rat>& coefficients() const { return coeff_; }

  Rat degree() const;

  /// Same coefficients on a refinement of the original graph (new vertices
  /// get 0). Requires n >= size().
  VertexDivisor extended_to(int n) const;

 private:
  std::vector<Rat> coeff_;
};

}  // namespace mgraph
