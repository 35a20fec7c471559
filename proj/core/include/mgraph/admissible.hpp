#pragma once

#include <array>
#include <string>
#include <vector>

#include "mgraph/calculus.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/linalg.hpp"

namespace mgraph {

/// Two-point resistance of the graph as a circuit with conductances 1/l(e).
/// Interior points are handled by subdividing first. Symmetric, zero iff the
/// points coincide.
Rat effective_resistance(const MetrizedGraph& g, const PointLocation& x,
                         const PointLocation& y);

/// Resistance between the endpoints of edge e in the graph with e deleted.
/// Returns false (no finite value) when e is a bridge; a loop yields 0.
bool deleted_edge_resistance(const MetrizedGraph& g, int e, Rat& out);

/// All-pairs vertex resistances of one graph from a single factorization.
class AllPairsResistance {
 public:
  explicit AllPairsResistance(const MetrizedGraph& g);

  Rat between(int u, int v) const;

 private:
  std::vector<VertexVector> basis_;  // pinned solve of each unit vector
};

/// The unique total-mass-1 measure admissible for D = 0: vertex mass
/// 1 - v(v)/2 and edge density dt/(l(e) + R_e), where R_e is the deleted-edge
/// resistance (0 for loops; a bridge gets density 0).
Measure canonical_measure(const MetrizedGraph& g);

/// The admissible measure for a divisor D of degree != -2, assembled as
/// (delta_D + 2 mu_can) / (deg D + 2). Total mass is exactly 1; when
/// d_v >= v(v) - 2 everywhere the result is verified nonnegative.
/// Throws DegreeMinusTwo.
Measure admissible_measure(const MetrizedGraph& g, const VertexDivisor& d);

/// Admissible measure, Green data and the constant c(G,D) for one (G, D).
struct GreenSystem {
  VertexDivisor divisor;
  Measure mu;
  /// green(x, y) = g_mu(x, y) on vertex pairs; symmetric.
  RatMatrix green;
  /// source[x] = g_mu(x, .) as a function on the graph.
  std::vector<PiecewiseQuadratic> source;
  /// The constant value of g_mu(D, y) + g_mu(y, y).
  Rat c;

  Rat green_of_divisor(const VertexDivisor& d, int y) const;
};

/// Builds the full Green system: for each vertex x, g_mu(x, .) solves
/// Delta f = delta_x - mu normalized by integral(f, mu) = 0.
/// Throws DegreeMinusTwo.
GreenSystem green_system(const MetrizedGraph& g, const VertexDivisor& d);

/// g_mu(x, y) for arbitrary points; interior points are pinned as vertices by
/// subdivision and the system is recomputed there (mu and g_mu are
/// subdivision-invariant). Throws DegreeMinusTwo.
Rat green_eval(const MetrizedGraph& g, const VertexDivisor& d,
               const PointLocation& x, const PointLocation& y);

struct PropertyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // empty when the check passes
};

/// Pass/fail report for the six defining properties of an admissible system.
struct PropertyReport {
  std::array<PropertyCheck, 6> checks;

  bool all_pass() const;
  int passed() const;
};

/// Exact verification of the six defining properties of (mu, g_mu, c):
/// (1) total mass 1, (2) symmetry, (3) sources continuous piecewise
/// quadratics, (4) Delta g(x,.) = delta_x - mu, (5) integral(g(x,.), mu) = 0,
/// (6) g(D,y) + g(y,y) constant over vertices and sampled interior points.
/// Reports failures instead of throwing.
PropertyReport verify_admissibility(const MetrizedGraph& g,
                                    const VertexDivisor& d,
                                    const GreenSystem& system);

}  // namespace mgraph
