#include "mgraph/calculus.hpp"

#include <optional>
#include <utility>

#include "mgraph/errors.hpp"

namespace mgraph {

PiecewiseQuadratic PiecewiseQuadratic::zero(const MetrizedGraph& g) {
  return PiecewiseQuadratic(
      std::vector<EdgePoly>(static_cast<size_t>(g.edge_count()),
                            EdgePoly{Rat(0), Rat(0), Rat(0)}));
}

Rat PiecewiseQuadratic::eval(const MetrizedGraph& g,
                             const PointLocation& p) const {
  validate_point(g, p);
  if (!p.is_vertex) {
    return polys_[g.edge_index(p.id)].eval(p.offset);
  }
  const int v = g.vertex_index(p.id);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).tail == v) return polys_[e].value_at_tail();
    if (g.edge(e).head == v) return polys_[e].value_at_head(g.edge(e).length);
  }
  throw BadPoint("vertex '" + p.id + "' has no incident edge");
}

void PiecewiseQuadratic::add_constant(const Rat& c) {
  for (auto& poly : polys_) poly.c0 += c;
}

bool is_continuous(const MetrizedGraph& g, const PiecewiseQuadratic& f) {
  if (f.edge_count() != g.edge_count()) return false;
  std::vector<std::optional<Rat>> value(g.vertex_count());
  auto consistent = [&](int v, Rat candidate) {
    if (!value[v]) {
      value[v] = std::move(candidate);
      return true;
    }
    return *value[v] == candidate;
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!consistent(edge.tail, f.on_edge(e).value_at_tail())) return false;
    if (!consistent(edge.head, f.on_edge(e).value_at_head(edge.length))) {
      return false;
    }
  }
  return true;
}

Measure Measure::zero(const MetrizedGraph& g) {
  return Measure{std::vector<Rat>(static_cast<size_t>(g.vertex_count()), Rat(0)),
                 std::vector<Rat>(static_cast<size_t>(g.edge_count()), Rat(0))};
}

Measure Measure::dirac(const MetrizedGraph& g, int v) {
  Measure m = zero(g);
  m.vertex_mass[v] = 1;
  return m;
}

Rat Measure::total_mass(const MetrizedGraph& g) const {
  Rat sum(0);
  for (const auto& mass : vertex_mass) sum += mass;
  for (int e = 0; e < g.edge_count(); ++e) {
    sum += edge_density[e] * g.edge(e).length;
  }
  return sum;
}

bool Measure::is_nonnegative() const {
  for (const auto& mass : vertex_mass) {
    if (mass < 0) return false;
  }
  for (const auto& density : edge_density) {
    if (density < 0) return false;
  }
  return true;
}

Measure& Measure::operator+=(const Measure& other) {
  for (size_t i = 0; i < vertex_mass.size(); ++i) {
    vertex_mass[i] += other.vertex_mass[i];
  }
  for (size_t e = 0; e < edge_density.size(); ++e) {
    edge_density[e] += other.edge_density[e];
  }
  return *this;
}

Measure& Measure::operator-=(const Measure& other) {
  for (size_t i = 0; i < vertex_mass.size(); ++i) {
    vertex_mass[i] -= other.vertex_mass[i];
  }
  for (size_t e = 0; e < edge_density.size(); ++e) {
    edge_density[e] -= other.edge_density[e];
  }
  return *this;
}

Measure& Measure::operator*=(const Rat& s) {
  for (auto& mass : vertex_mass) mass *= s;
  for (auto& density : edge_density) density *= s;
  return *this;
}

VertexVector dirac_of(const MetrizedGraph& g, const PiecewiseQuadratic& f) {
  if (!is_continuous(g, f)) {
    throw DiscontinuousFunction("dirac_of needs a continuous function");
  }
  VertexVector out(static_cast<size_t>(g.vertex_count()), Rat(0));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const EdgePoly& poly = f.on_edge(e);
    out[edge.tail] += poly.outgoing_derivative_at_tail();
    out[edge.head] += poly.outgoing_derivative_at_head(edge.length);
  }
  return out;
}

Measure laplacian_of(const MetrizedGraph& g, const PiecewiseQuadratic& f) {
  VertexVector dirac = dirac_of(g, f);
  Measure m = Measure::zero(g);
  for (int v = 0; v < g.vertex_count(); ++v) m.vertex_mass[v] = -dirac[v];
  for (int e = 0; e < g.edge_count(); ++e) {
    m.edge_density[e] = -2 * f.on_edge(e).c2;
  }
  return m;
}

VertexVector q_map(const MetrizedGraph& g, const Measure& m) {
  VertexVector out(m.vertex_mass.begin(), m.vertex_mass.end());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    Rat half = m.edge_density[e] * edge.length / 2;
    out[edge.tail] += half;
    out[edge.head] += half;
  }
  return out;
}

VertexVector p_map(const MetrizedGraph& g, const PiecewiseQuadratic& f) {
  if (!is_continuous(g, f)) {
    throw DiscontinuousFunction("p_map needs a continuous function");
  }
  VertexVector out(static_cast<size_t>(g.vertex_count()), Rat(0));
  std::vector<bool> seen(g.vertex_count(), false);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!seen[edge.tail]) {
      out[edge.tail] = f.on_edge(e).value_at_tail();
      seen[edge.tail] = true;
    }
    if (!seen[edge.head]) {
      out[edge.head] = f.on_edge(e).value_at_head(edge.length);
      seen[edge.head] = true;
    }
  }
  return out;
}

RatMatrix laplacian_matrix(const MetrizedGraph& g) {
  const int n = g.vertex_count();
  RatMatrix lap(n, n);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) continue;
    Rat conductance = Rat(1) / edge.length;
    lap(edge.tail, edge.head) -= conductance;
    lap(edge.head, edge.tail) -= conductance;
    lap(edge.tail, edge.tail) += conductance;
    lap(edge.head, edge.head) += conductance;
  }
  return lap;
}

Rat integrate(const MetrizedGraph& g, const PiecewiseQuadratic& f,
              const Measure& m) {
  if (!is_continuous(g, f)) {
    throw DiscontinuousFunction("integrate needs a continuous function");
  }
  Rat sum(0);
  VertexVector values = p_map(g, f);
  for (int v = 0; v < g.vertex_count(); ++v) {
    sum += m.vertex_mass[v] * values[v];
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Rat& l = g.edge(e).length;
    const EdgePoly& poly = f.on_edge(e);
    // integral of c2 t^2 + c1 t + c0 over [0, l]
    Rat primitive = poly.c2 * l * l * l / 3 + poly.c1 * l * l / 2 + poly.c0 * l;
    sum += m.edge_density[e] * primitive;
  }
  return sum;
}

PiecewiseQuadratic assemble_from_vertex_values(const MetrizedGraph& g,
                                               const VertexVector& values,
                                               const std::vector<Rat>& c2) {
  std::vector<EdgePoly> polys(static_cast<size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const Rat& l = edge.length;
    Rat c0 = values[edge.tail];
    Rat c1 = (values[edge.head] - values[edge.tail]) / l - c2[e] * l;
    polys[e] = EdgePoly{c2[e], std::move(c1), std::move(c0)};
  }
  return PiecewiseQuadratic(std::move(polys));
}

PiecewiseQuadratic solve_poisson(const MetrizedGraph& g, const Measure& target,
                                 int base_vertex) {
  if (target.total_mass(g) != 0) {
    throw NonzeroMass("poisson target must have total mass 0, got " +
                      to_string(target.total_mass(g)));
  }
  std::vector<Rat> c2(static_cast<size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    c2[e] = -target.edge_density[e] / 2;
  }
  // Vertex values solve L p(f) = q(target); the density contribution to the
  // right-hand side is exactly q of the target's continuous part.
  VertexVector rhs = q_map(g, target);
  VertexVector values = solve_pinned(laplacian_matrix(g), rhs, base_vertex);
  return assemble_from_vertex_values(g, values, c2);
}

}  // namespace mgraph
