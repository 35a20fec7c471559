#pragma once

#include <vector>

#include "mgraph/admissible.hpp"
#include "mgraph/calculus.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/linalg.hpp"

namespace mgraph {

/// Dual graph of a semistable fiber: vertices are irreducible components
/// (with geometric genus g_v), unit-length edges are the nodes. The curve
/// genus is derived: g = sum g_v + first Betti number.
struct FiberGraph {
  MetrizedGraph graph;
  std::vector<int> component_genus;  // per vertex, >= 0
  int curve_genus = 0;               // derived, >= 1

  /// delta_y: number of nodes of the fiber = number of edges.
  int node_count() const { return graph.edge_count(); }
};

/// Validates unit lengths and nonnegative genera, derives the curve genus.
/// Throws NonUnitLength, GenusTooSmall (derived genus < 1), or the
/// construction errors of MetrizedGraph.
FiberGraph fiber_graph(const MetrizedGraph& graph,
                       std::vector<int> component_genus);

/// K_y = sum_v (2 p_a(C_v) - 2 - (C_v . C_v)) v with p_a = g_v + loops at v
/// and (C_v . C_v) = -(non-loop edge ends at v). Degree is asserted to be
/// exactly 2g - 2 (DegreeMismatch signals an internal bug).
VertexDivisor canonical_fiber_divisor(const FiberGraph& fiber);

/// Matrix ((C_v . C_v')): off-diagonal counts joining edges, diagonal makes
/// row sums zero; loops do not enter. Equals the negated unit-length
/// Laplacian matrix.
RatMatrix intersection_matrix(const FiberGraph& fiber);

/// The graph-side correction of the admissible pairing:
/// sum_{v,v'} d_v g_{mu_y}(v, v') e_{v'}, with the Green system of
/// (G_y, K_y). Symmetric and bilinear.
Rat pairing_correction(const FiberGraph& fiber, const VertexVector& d,
                       const VertexVector& e);

/// Both sides of the vertical-intersection identity
///   d_v + sum_{w,w'} d_w g(w,w') (C_w' . C_v)  ==  (sum d) q(mu_y)(v),
/// checked for exact equality (PropositionA3Violation on mismatch);
/// returns the common value.
VertexVector vertical_admissible_intersection(const FiberGraph& fiber,
                                              const VertexVector& d);

/// Per-fiber local term g_{mu_y}(K_y, K_y) - 2(2g-2) c(G_y, K_y).
/// For single-vertex fibers this equals -(g-1) delta_y / (3g) exactly.
/// Throws GenusTooSmall when g < 2.
Rat local_term(const FiberGraph& fiber);

struct CorollaryA2Report {
  /// Per-vertex exact check of d_v + sum_v' a(v,v') g(v') = (deg D) q(mu)(v).
  std::vector<bool> vertex_ok;

  bool all_pass() const;
};

/// Verifies the discrete identity above for inputs satisfying
/// integral(mu) = 1 and Delta(gfun) = delta_D - (deg D) mu; the hypothesis is
/// checked first and HypothesisViolated is thrown when it fails.
CorollaryA2Report corollary_a2_check(const MetrizedGraph& g,
                                     const VertexDivisor& d, const Measure& mu,
                                     const PiecewiseQuadratic& gfun);

}  // namespace mgraph
