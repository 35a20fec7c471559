#pragma once

#include <vector>

#include "mgraph/graph.hpp"
#include "mgraph/linalg.hpp"
#include "mgraph/rational.hpp"

namespace mgraph {

/// Rational vector indexed by the vertex order of one graph.
using VertexVector = std::vector<Rat>;

/// One quadratic in the tail-anchored arc-length coordinate of an edge:
/// f(t) = c2 t^2 + c1 t + c0 with t in [0, l(e)].
struct EdgePoly {
  Rat c2, c1, c0;

  Rat eval(const Rat& t) const { return (c2 * t + c1) * t + c0; }
  Rat value_at_tail() const { return c0; }
  Rat value_at_head(const Rat& length) const { return eval(length); }
  /// One-sided derivative pointing into the edge from the tail.
  Rat outgoing_derivative_at_tail() const { return c1; }
  /// One-sided derivative pointing into the edge from the head,
  /// i.e. in the direction of decreasing t.
  Rat outgoing_derivative_at_head(const Rat& length) const {
    return -(2 * c2 * length + c1);
  }

  bool operator==(const EdgePoly& other) const {
    return c2 == other.c2 && c1 == other.c1 && c0 == other.c0;
  }
};

/// Continuous piecewise-quadratic function: one EdgePoly per edge, with all
/// incident branch values agreeing at every vertex.
class PiecewiseQuadratic {
 public:
  PiecewiseQuadratic() = default;
  explicit PiecewiseQuadratic(std::vector<EdgePoly> polys)
      : polys_(std::move(polys)) {}

  /// The zero function on g.
  static PiecewiseQuadratic zero(const MetrizedGraph& g);

  int edge_count() const { return static_cast<int>(polys_.size()); }
  const EdgePoly& on_edge(int e) const { return polys_[e]; }
  EdgePoly& on_edge(int e) { return polys_[e]; }

  /// Value at a point (vertex value read from any incident branch).
  Rat eval(const MetrizedGraph& g, const PointLocation& p) const;

  void add_constant(const Rat& c);

  bool operator==(const PiecewiseQuadratic& other) const = default;

 private:
  std::vector<EdgePoly> polys_;
};

/// True when every vertex sees a single common value across its incident
/// branches (loops must match at both ends).
bool is_continuous(const MetrizedGraph& g, const PiecewiseQuadratic& f);

/// Measure with rational point masses on vertices and a uniform density
/// a_e dt per edge. Signed values are allowed.
struct Measure {
  std::vector<Rat> vertex_mass;  // indexed by vertex
  std::vector<Rat> edge_density; // indexed by edge

  static Measure zero(const MetrizedGraph& g);
  static Measure dirac(const MetrizedGraph& g, int v);

  Rat total_mass(const MetrizedGraph& g) const;
  bool is_nonnegative() const;

  Measure& operator+=(const Measure& other);
  Measure& operator-=(const Measure& other);
  Measure& operator*=(const Rat& s);

  bool operator==(const Measure& other) const = default;
};

/// Sum over branches at each vertex of one-sided outgoing derivatives.
/// Throws DiscontinuousFunction.
VertexVector dirac_of(const MetrizedGraph& g, const PiecewiseQuadratic& f);

/// Distributional Laplacian -f'' - dirac(f): density -2 c2 per edge and
/// vertex mass -dirac_of(f). Always has total mass zero.
Measure laplacian_of(const MetrizedGraph& g, const PiecewiseQuadratic& f);

/// Vertex discretization of a measure: point mass plus a_e l(e)/2 per
/// incident edge end (a loop contributes a_e l(e)).
VertexVector q_map(const MetrizedGraph& g, const Measure& m);

/// Restriction of f to the vertex set.
VertexVector p_map(const MetrizedGraph& g, const PiecewiseQuadratic& f);

/// Weighted graph Laplacian with conductances 1/l(e); loops contribute
/// nothing. Symmetric, zero row sums, PSD with kernel spanned by constants.
RatMatrix laplacian_matrix(const MetrizedGraph& g);

/// Exact integral of f against m.
Rat integrate(const MetrizedGraph& g, const PiecewiseQuadratic& f,
              const Measure& m);

/// Exact Poisson solve: returns f with laplacian_of(f) == target and
/// f(base_vertex) == 0. The quadratic coefficients come from the target
/// densities (c2 = -a_e/2); the vertex values solve L p(f) = q(target).
/// Throws NonzeroMass when the target's total mass is not zero.
PiecewiseQuadratic solve_poisson(const MetrizedGraph& g, const Measure& target,
                                 int base_vertex);

/// The unique piecewise quadratic with the given vertex values and leading
/// coefficients (continuous by construction).
PiecewiseQuadratic assemble_from_vertex_values(const MetrizedGraph& g,
                                               const VertexVector& values,
                                               const std::vector<Rat>& c2);

}  // namespace mgraph
