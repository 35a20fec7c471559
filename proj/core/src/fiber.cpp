#include "mgraph/fiber.hpp"

#include <string>

#include "mgraph/errors.hpp"

namespace mgraph {

FiberGraph fiber_graph(const MetrizedGraph& graph,
                       std::vector<int> component_genus) {
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (graph.edge(e).length != 1) {
      throw NonUnitLength("fiber edge '" + graph.edge(e).id +
                          "' has length " + to_string(graph.edge(e).length) +
                          ", nodes correspond to edges of length 1");
    }
  }
  if (static_cast<int>(component_genus.size()) != graph.vertex_count()) {
    throw Error("component genus list does not match the vertex count");
  }
  int genus = graph.genus();
  for (int g : component_genus) {
    if (g < 0) {
      throw GenusTooSmall("component genus must be nonnegative");
    }
    genus += g;
  }
  if (genus < 1) {
    throw GenusTooSmall("derived curve genus " + std::to_string(genus) +
                        " is below 1");
  }
  return FiberGraph{graph, std::move(component_genus), genus};
}

VertexDivisor canonical_fiber_divisor(const FiberGraph& fiber) {
  const MetrizedGraph& g = fiber.graph;
  std::vector<int> loops(g.vertex_count(), 0);
  std::vector<int> non_loop_ends(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) {
      loops[edge.tail] += 1;
    } else {
      non_loop_ends[edge.tail] += 1;
      non_loop_ends[edge.head] += 1;
    }
  }

  VertexDivisor k(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    // 2 p_a(C_v) - 2 - (C_v . C_v), with p_a = g_v + loops at v and
    // self-intersection -(non-loop ends at v) forced by C_v . F = 0.
    k[v] = 2 * (fiber.component_genus[v] + loops[v]) - 2 + non_loop_ends[v];
  }
  if (k.degree() != 2 * fiber.curve_genus - 2) {
    throw DegreeMismatch("internal: deg K_y = " + to_string(k.degree()) +
                         " but 2g-2 = " +
                         std::to_string(2 * fiber.curve_genus - 2));
  }
  return k;
}

RatMatrix intersection_matrix(const FiberGraph& fiber) {
  RatMatrix lap = laplacian_matrix(fiber.graph);
  RatMatrix m(lap.rows(), lap.cols());
  for (int i = 0; i < lap.rows(); ++i) {
    for (int j = 0; j < lap.cols(); ++j) m(i, j) = -lap(i, j);
  }
  return m;
}

namespace {

GreenSystem fiber_green_system(const FiberGraph& fiber) {
  return green_system(fiber.graph, canonical_fiber_divisor(fiber));
}

}  // namespace

Rat pairing_correction(const FiberGraph& fiber, const VertexVector& d,
                       const VertexVector& e) {
  GreenSystem sys = fiber_green_system(fiber);
  const int n = fiber.graph.vertex_count();
  Rat sum(0);
  for (int v = 0; v < n; ++v) {
    if (d[v] == 0) continue;
    for (int w = 0; w < n; ++w) {
      if (e[w] == 0) continue;
      sum += d[v] * sys.green(v, w) * e[w];
    }
  }
  return sum;
}

VertexVector vertical_admissible_intersection(const FiberGraph& fiber,
                                              const VertexVector& d) {
  const MetrizedGraph& g = fiber.graph;
  const int n = g.vertex_count();
  GreenSystem sys = fiber_green_system(fiber);
  RatMatrix inter = intersection_matrix(fiber);

  Rat fiber_degree(0);
  for (const auto& coeff : d) fiber_degree += coeff;
  VertexVector qmu = q_map(g, sys.mu);

  VertexVector left(static_cast<size_t>(n), Rat(0));
  for (int v = 0; v < n; ++v) {
    Rat sum = d[v];
    for (int w = 0; w < n; ++w) {
      if (d[w] == 0) continue;
      for (int w2 = 0; w2 < n; ++w2) {
        sum += d[w] * sys.green(w, w2) * inter(w2, v);
      }
    }
    left[v] = std::move(sum);
  }

  for (int v = 0; v < n; ++v) {
    Rat right = fiber_degree * qmu[v];
    if (left[v] != right) {
      throw PropositionA3Violation(
          "internal: vertical intersection mismatch at vertex '" +
          g.vertex_id(v) + "': " + to_string(left[v]) + " vs " +
          to_string(right));
    }
  }
  return left;
}

Rat local_term(const FiberGraph& fiber) {
  const int g = fiber.curve_genus;
  if (g < 2) {
    throw GenusTooSmall("local term needs curve genus >= 2");
  }
  GreenSystem sys = fiber_green_system(fiber);
  const VertexDivisor& k = sys.divisor;
  const int n = fiber.graph.vertex_count();

  Rat green_kk(0);
  for (int v = 0; v < n; ++v) {
    if (k[v] == 0) continue;
    for (int w = 0; w < n; ++w) {
      green_kk += k[v] * sys.green(v, w) * k[w];
    }
  }
  return green_kk - 2 * (2 * g - 2) * sys.c;
}

bool CorollaryA2Report::all_pass() const {
  for (bool ok : vertex_ok) {
    if (!ok) return false;
  }
  return true;
}

CorollaryA2Report corollary_a2_check(const MetrizedGraph& g,
                                     const VertexDivisor& d, const Measure& mu,
                                     const PiecewiseQuadratic& gfun) {
  if (mu.total_mass(g) != 1) {
    throw HypothesisViolated("mu must have total mass 1, got " +
                             to_string(mu.total_mass(g)));
  }
  const int n = g.vertex_count();
  const VertexDivisor divisor = d.extended_to(n);
  const Rat deg = divisor.degree();

  Measure expected = Measure::zero(g);
  for (int v = 0; v < n; ++v) expected.vertex_mass[v] = divisor[v];
  Measure scaled = mu;
  scaled *= deg;
  expected -= scaled;
  if (laplacian_of(g, gfun) != expected) {
    throw HypothesisViolated(
        "Delta(g) != delta_D - deg(D) mu; the identity does not apply");
  }

  // d_v + sum_v' a(v,v') g(v') = deg(D) q(mu)(v), where (-a(v,v')) is the
  // Laplacian matrix.
  RatMatrix lap = laplacian_matrix(g);
  VertexVector values = p_map(g, gfun);
  VertexVector lhs = lap.multiply(values);
  VertexVector qmu = q_map(g, mu);

  CorollaryA2Report report;
  report.vertex_ok.resize(n);
  for (int v = 0; v < n; ++v) {
    report.vertex_ok[v] = divisor[v] - lhs[v] == deg * qmu[v];
  }
  return report;
}

}  // namespace mgraph
