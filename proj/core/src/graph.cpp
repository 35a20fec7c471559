#include "mgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mgraph/errors.hpp"

namespace mgraph {

namespace {

// Union-find over vertex indices.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) { parent_[find(a)] = find(b); }

  bool connected(int a, int b) { return find(a) == find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

MetrizedGraph MetrizedGraph::build(std::vector<std::string> vertices,
                                   std::vector<EdgeSpec> edges) {
  if (edges.empty()) {
    throw EmptyGraph("a metrized graph needs at least one edge");
  }
  MetrizedGraph g;
  g.vertex_ids_ = std::move(vertices);
  for (int i = 0; i < static_cast<int>(g.vertex_ids_.size()); ++i) {
    if (!g.vertex_index_.emplace(g.vertex_ids_[i], i).second) {
      throw DuplicateId("duplicate vertex id '" + g.vertex_ids_[i] + "'");
    }
  }
  g.valence_.assign(g.vertex_ids_.size(), 0);

  DisjointSets components(static_cast<int>(g.vertex_ids_.size()));
  g.edges_.reserve(edges.size());
  for (auto& spec : edges) {
    auto tail_it = g.vertex_index_.find(spec.tail);
    if (tail_it == g.vertex_index_.end()) {
      throw UnknownVertex("edge '" + spec.id + "' references unknown vertex '" +
                          spec.tail + "'");
    }
    auto head_it = g.vertex_index_.find(spec.head);
    if (head_it == g.vertex_index_.end()) {
      throw UnknownVertex("edge '" + spec.id + "' references unknown vertex '" +
                          spec.head + "'");
    }
    if (spec.length <= 0) {
      throw NonpositiveLength("edge '" + spec.id + "' has nonpositive length " +
                              to_string(spec.length));
    }
    const int e = static_cast<int>(g.edges_.size());
    if (!g.edge_index_.emplace(spec.id, e).second) {
      throw DuplicateId("duplicate edge id '" + spec.id + "'");
    }
    g.edges_.push_back(
        Edge{std::move(spec.id), tail_it->second, head_it->second,
             std::move(spec.length)});
    g.valence_[tail_it->second] += 1;
    g.valence_[head_it->second] += 1;
    components.unite(tail_it->second, head_it->second);
  }

  for (int v = 1; v < g.vertex_count(); ++v) {
    if (!components.connected(0, v)) {
      throw DisconnectedGraph("vertex '" + g.vertex_ids_[v] +
                              "' is not connected to '" + g.vertex_ids_[0] +
                              "'");
    }
  }
  return g;
}

bool MetrizedGraph::has_vertex(std::string_view id) const {
  return vertex_index_.find(std::string(id)) != vertex_index_.end();
}

bool MetrizedGraph::has_edge(std::string_view id) const {
  return edge_index_.find(std::string(id)) != edge_index_.end();
}

int MetrizedGraph::vertex_index(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) {
    throw UnknownVertex("unknown vertex '" + std::string(id) + "'");
  }
  return it->second;
}

int MetrizedGraph::edge_index(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) {
    throw UnknownEdge("unknown edge '" + std::string(id) + "'");
  }
  return it->second;
}

Rat MetrizedGraph::total_length() const {
  Rat sum(0);
  for (const auto& e : edges_) sum += e.length;
  return sum;
}

void validate_point(const MetrizedGraph& g, const PointLocation& p) {
  if (p.is_vertex) {
    g.vertex_index(p.id);
    return;
  }
  const int e = g.edge_index(p.id);
  if (p.offset <= 0 || p.offset >= g.edge(e).length) {
    throw BadPoint("offset " + to_string(p.offset) + " is not interior to edge '" +
                   p.id + "' of length " + to_string(g.edge(e).length));
  }
}

namespace {

std::string fresh_id(std::string base,
                     const MetrizedGraph& g,
                     const std::vector<std::string>& pending_vertices,
                     const std::vector<std::string>& pending_edges) {
  auto taken = [&](const std::string& id) {
    if (g.has_vertex(id) || g.has_edge(id)) return true;
    if (std::find(pending_vertices.begin(), pending_vertices.end(), id) !=
        pending_vertices.end()) {
      return true;
    }
    return std::find(pending_edges.begin(), pending_edges.end(), id) !=
           pending_edges.end();
  };
  while (taken(base)) base += "'";
  return base;
}

}  // namespace

Subdivision subdivide_at(const MetrizedGraph& g,
                         const std::vector<PointLocation>& points) {
  for (const auto& p : points) validate_point(g, p);

  // Cut offsets per edge, deduplicated and sorted.
  std::vector<std::map<Rat, int>> cuts(g.edge_count());  // offset -> slot
  struct Resolved {
    bool vertex;
    int index;   // vertex index, or edge index
    Rat offset;  // for interior points
  };
  std::vector<Resolved> resolved;
  resolved.reserve(points.size());
  for (const auto& p : points) {
    if (p.is_vertex) {
      resolved.push_back({true, g.vertex_index(p.id), Rat(0)});
    } else {
      const int e = g.edge_index(p.id);
      cuts[e].emplace(p.offset, -1);
      resolved.push_back({false, e, p.offset});
    }
  }

  std::vector<std::string> new_vertices;
  std::vector<std::string> new_edge_ids;
  std::vector<std::string> cut_vertex_ids;  // parallel to assigned slots
  std::vector<EdgeSpec> edges;
  edges.reserve(g.edge_count() + points.size());

  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (cuts[e].empty()) {
      edges.push_back(EdgeSpec{edge.id, g.vertex_id(edge.tail),
                               g.vertex_id(edge.head), edge.length});
      new_edge_ids.push_back(edge.id);
      continue;
    }
    int slot = 0;
    for (auto& [offset, vslot] : cuts[e]) {
      std::string vid = fresh_id(edge.id + "@" + to_string(offset), g,
                                 new_vertices, new_edge_ids);
      vslot = static_cast<int>(new_vertices.size());
      new_vertices.push_back(vid);
      ++slot;
    }
    // Chain of segments tail -> cut1 -> ... -> head.
    Rat prev_offset(0);
    std::string prev_vertex = g.vertex_id(edge.tail);
    int piece = 1;
    for (const auto& [offset, vslot] : cuts[e]) {
      std::string eid = fresh_id(edge.id + "." + std::to_string(piece), g,
                                 new_vertices, new_edge_ids);
      edges.push_back(EdgeSpec{eid, prev_vertex, new_vertices[vslot],
                               offset - prev_offset});
      new_edge_ids.push_back(std::move(eid));
      prev_offset = offset;
      prev_vertex = new_vertices[vslot];
      ++piece;
    }
    std::string eid = fresh_id(edge.id + "." + std::to_string(piece), g,
                               new_vertices, new_edge_ids);
    edges.push_back(EdgeSpec{eid, prev_vertex, g.vertex_id(edge.head),
                             edge.length - prev_offset});
    new_edge_ids.push_back(std::move(eid));
  }

  std::vector<std::string> vertices = g.vertex_ids();
  vertices.insert(vertices.end(), new_vertices.begin(), new_vertices.end());

  Subdivision result{MetrizedGraph::build(std::move(vertices), std::move(edges)),
                     {}};
  result.point_vertex.reserve(points.size());
  for (const auto& r : resolved) {
    if (r.vertex) {
      result.point_vertex.push_back(g.vertex_id(r.index));
    } else {
      result.point_vertex.push_back(new_vertices[cuts[r.index].at(r.offset)]);
    }
  }
  return result;
}

std::pair<MetrizedGraph, std::string> subdivide(const MetrizedGraph& g,
                                                const PointLocation& p) {
  if (p.is_vertex) {
    throw PointIsVertex("point '" + p.id + "' is a vertex, nothing to split");
  }
  auto sub = subdivide_at(g, {p});
  return {std::move(sub.graph), std::move(sub.point_vertex.front())};
}

Rat VertexDivisor::degree() const {
  Rat sum(0);
  for (const auto& c : coeff_) sum += c;
  return sum;
}

VertexDivisor VertexDivisor::extended_to(int n) const {
  std::vector<Rat> coeff = coeff_;
  coeff.resize(static_cast<size_t>(n), Rat(0));
  return VertexDivisor(std::move(coeff));
}

}  // namespace mgraph
