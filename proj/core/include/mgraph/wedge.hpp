#pragma once

#include <vector>

#include "mgraph/calculus.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/rational.hpp"

namespace mgraph {

/// Wedge of n circles joined at a single point O, with a positive integer
/// parameter g. Closed forms below are exact and serve as an independent
/// oracle against the general solver.
struct WedgeSpec {
  std::vector<Rat> lengths;  // l_1..l_n, all positive
  int genus = 1;             // g >= 1

  int circle_count() const { return static_cast<int>(lengths.size()); }
  Rat total_length() const;
};

/// Point of a wedge: circle index (0-based) and a coordinate along it.
/// The wedge point O is any circle at coordinate 0.
struct WedgePoint {
  int circle = 0;
  Rat t;

  static WedgePoint origin() { return WedgePoint{0, Rat(0)}; }
};

/// Validates lengths and genus. Throws NonpositiveLength, GenusTooSmall
/// (g < 1), EmptyGraph (no circles).
WedgeSpec make_wedge(std::vector<Rat> lengths, int genus);

/// phi(t) = t^2/(2l) - t/2 with t reduced mod l; well defined on the circle
/// since phi(t) = phi(l - t). Throws NonpositiveLength.
Rat circle_phi(const Rat& l, const Rat& t);

/// The wedge as a metrized graph: one vertex "O" and loops "c1".."cn".
MetrizedGraph wedge_graph(const WedgeSpec& spec);

/// K = (2g-2) O on wedge_graph(spec).
VertexDivisor wedge_divisor(const WedgeSpec& spec, const MetrizedGraph& g);

/// mu = ((g-n)/g) delta_O + sum_i dt_i/(g l_i), on wedge_graph(spec).
/// Total mass is exactly 1; the vertex mass is negative when g < n.
Measure wedge_measure(const WedgeSpec& spec);

/// Closed-form Green function:
///   same circle:  phi_i(x-y) - ((g-1)/g)(phi_i(x) + phi_i(y)) + L/(12 g^2)
///   cross circle: (phi_i(x) + phi_j(y))/g + L/(12 g^2)
/// Throws IndexOutOfRange on a bad circle index.
Rat wedge_green(const WedgeSpec& spec, const WedgePoint& x,
                const WedgePoint& y);

/// c(G, K) = L(2g-1)/(12 g^2).
Rat wedge_constant(const WedgeSpec& spec);

}  // namespace mgraph
