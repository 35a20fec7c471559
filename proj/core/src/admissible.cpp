#include "mgraph/admissible.hpp"

#include <numeric>
#include <utility>

#include "mgraph/errors.hpp"

namespace mgraph {

namespace {

bool vertices_connected_without_edge(const MetrizedGraph& g, int skip_edge,
                                     int a, int b) {
  if (a == b) return true;
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == skip_edge) continue;
    parent[find(g.edge(e).tail)] = find(g.edge(e).head);
  }
  return find(a) == find(b);
}

}  // namespace

Rat effective_resistance(const MetrizedGraph& g, const PointLocation& x,
                         const PointLocation& y) {
  auto sub = subdivide_at(g, {x, y});
  const MetrizedGraph& h = sub.graph;
  const int a = h.vertex_index(sub.point_vertex[0]);
  const int b = h.vertex_index(sub.point_vertex[1]);
  if (a == b) return Rat(0);

  VertexVector rhs(static_cast<size_t>(h.vertex_count()), Rat(0));
  rhs[a] = 1;
  rhs[b] = -1;
  VertexVector potential = solve_pinned(laplacian_matrix(h), rhs, b);
  return potential[a];
}

bool deleted_edge_resistance(const MetrizedGraph& g, int e, Rat& out) {
  const Edge& edge = g.edge(e);
  if (edge.is_loop()) {
    out = 0;
    return true;
  }
  if (!vertices_connected_without_edge(g, e, edge.tail, edge.head)) {
    return false;  // bridge
  }
  std::vector<EdgeSpec> rest;
  rest.reserve(g.edge_count() - 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == e) continue;
    const Edge& other = g.edge(i);
    rest.push_back(EdgeSpec{other.id, g.vertex_id(other.tail),
                            g.vertex_id(other.head), other.length});
  }
  // If the endpoints stay connected, deleting one edge keeps the whole graph
  // connected, so the subgraph is again a valid metrized graph.
  MetrizedGraph h = MetrizedGraph::build(g.vertex_ids(), std::move(rest));
  out = effective_resistance(h, PointLocation::at_vertex(g.vertex_id(edge.tail)),
                             PointLocation::at_vertex(g.vertex_id(edge.head)));
  return true;
}

AllPairsResistance::AllPairsResistance(const MetrizedGraph& g) {
  const int n = g.vertex_count();
  basis_.reserve(n);
  if (n == 1) {
    basis_.push_back(VertexVector{Rat(0)});
    return;
  }
  PinnedSolver solver(laplacian_matrix(g), 0);
  for (int w = 0; w < n; ++w) {
    VertexVector rhs(static_cast<size_t>(n), Rat(0));
    rhs[w] = 1;
    basis_.push_back(solver.solve(rhs));
  }
}

Rat AllPairsResistance::between(int u, int v) const {
  return basis_[u][u] - basis_[u][v] - basis_[v][u] + basis_[v][v];
}

Measure canonical_measure(const MetrizedGraph& g) {
  if (g.edge_count() == 0) {
    throw EmptyGraph("canonical measure needs at least one edge");
  }
  Measure mu = Measure::zero(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    Rat half_valence(g.valence(v), 2);
    half_valence.canonicalize();
    mu.vertex_mass[v] = 1 - half_valence;
  }

  // Edge density 1/(l(e) + R_e) with R_e the deleted-edge resistance. The
  // parallel law 1/R_G(u,v) = 1/l(e) + 1/R_e turns this into
  // (l(e) - R_G(u,v)) / l(e)^2, which needs only whole-graph resistances:
  // a loop gives 1/l(e), a bridge (R_G = l(e)) gives 0.
  const AllPairsResistance resistance(g);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const Rat& l = edge.length;
    mu.edge_density[e] = (l - resistance.between(edge.tail, edge.head)) / (l * l);
  }
  return mu;
}

Measure admissible_measure(const MetrizedGraph& g, const VertexDivisor& d) {
  const VertexDivisor divisor = d.extended_to(g.vertex_count());
  Rat deg = divisor.degree();
  if (deg == -2) {
    throw DegreeMinusTwo("no admissible measure exists for degree -2");
  }
  Measure mu = canonical_measure(g);
  mu *= Rat(2);
  for (int v = 0; v < g.vertex_count(); ++v) mu.vertex_mass[v] += divisor[v];
  mu *= Rat(1) / (deg + 2);

  // The existence theorem promises positivity under d_v >= v(v) - 2.
  bool hypothesis = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (divisor[v] < g.valence(v) - 2) {
      hypothesis = false;
      break;
    }
  }
  if (hypothesis && !mu.is_nonnegative()) {
    throw Error("internal: admissible measure not positive although d_v >= v(v)-2");
  }
  return mu;
}

Rat GreenSystem::green_of_divisor(const VertexDivisor& d, int y) const {
  Rat sum(0);
  for (int x = 0; x < d.size(); ++x) {
    if (d[x] != 0) sum += d[x] * green(x, y);
  }
  return sum;
}

GreenSystem green_system(const MetrizedGraph& g, const VertexDivisor& d) {
  if (d.degree() == -2) {
    throw DegreeMinusTwo("no Green system exists for degree -2");
  }
  const int n = g.vertex_count();
  GreenSystem sys;
  sys.divisor = d.extended_to(n);
  sys.mu = admissible_measure(g, sys.divisor);
  sys.green = RatMatrix(n, n);
  sys.source.resize(n);

  // Delta g(x,.) = delta_x - mu fixes the leading coefficients once.
  std::vector<Rat> c2(static_cast<size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    c2[e] = sys.mu.edge_density[e] / 2;
  }
  VertexVector qmu = q_map(g, sys.mu);

  RatMatrix lap = laplacian_matrix(g);
  PinnedSolver solver(lap, 0);
  for (int x = 0; x < n; ++x) {
    VertexVector rhs(static_cast<size_t>(n), Rat(0));
    for (int v = 0; v < n; ++v) rhs[v] = -qmu[v];
    rhs[x] += 1;
    VertexVector values = solver.solve(rhs);
    PiecewiseQuadratic f = assemble_from_vertex_values(g, values, c2);
    f.add_constant(-integrate(g, f, sys.mu));
    VertexVector row = p_map(g, f);
    for (int y = 0; y < n; ++y) sys.green(x, y) = row[y];
    sys.source[x] = std::move(f);
  }

  sys.c = sys.green_of_divisor(sys.divisor, 0) + sys.green(0, 0);
  return sys;
}

Rat green_eval(const MetrizedGraph& g, const VertexDivisor& d,
               const PointLocation& x, const PointLocation& y) {
  auto sub = subdivide_at(g, {x, y});
  GreenSystem sys =
      green_system(sub.graph, d.extended_to(sub.graph.vertex_count()));
  const int a = sub.graph.vertex_index(sub.point_vertex[0]);
  const int b = sub.graph.vertex_index(sub.point_vertex[1]);
  return sys.green(a, b);
}

bool PropertyReport::all_pass() const {
  for (const auto& check : checks) {
    if (!check.pass) return false;
  }
  return true;
}

int PropertyReport::passed() const {
  int count = 0;
  for (const auto& check : checks) count += check.pass ? 1 : 0;
  return count;
}

PropertyReport verify_admissibility(const MetrizedGraph& g,
                                    const VertexDivisor& d,
                                    const GreenSystem& system) {
  PropertyReport report;
  const int n = g.vertex_count();
  const VertexDivisor divisor = d.extended_to(n);

  // (1) total mass 1
  {
    Rat mass = system.mu.total_mass(g);
    report.checks[0] = {"total mass 1", mass == 1,
                        mass == 1 ? "" : "total mass is " + to_string(mass)};
  }

  // (2) symmetry of the vertex Green values, and agreement between the
  // source functions and the stored matrix.
  {
    bool ok = system.green.rows() == n && system.green.cols() == n &&
              static_cast<int>(system.source.size()) == n;
    std::string detail = ok ? "" : "system shape does not match the graph";
    if (ok && !system.green.is_symmetric()) {
      ok = false;
      detail = "vertex Green matrix is not symmetric";
    }
    if (ok) {
      for (int x = 0; x < n && ok; ++x) {
        VertexVector row = p_map(g, system.source[x]);
        for (int y = 0; y < n && ok; ++y) {
          if (row[y] != system.green(x, y)) {
            ok = false;
            detail = "source function of " + g.vertex_id(x) +
                     " disagrees with the stored value at " + g.vertex_id(y);
          }
        }
      }
    }
    report.checks[1] = {"symmetry", ok, detail};
  }

  // (3) each source is a continuous piecewise quadratic on (G, V)
  {
    bool ok = static_cast<int>(system.source.size()) == n;
    std::string detail = ok ? "" : "missing source functions";
    for (int x = 0; x < n && ok; ++x) {
      if (system.source[x].edge_count() != g.edge_count() ||
          !is_continuous(g, system.source[x])) {
        ok = false;
        detail = "source of " + g.vertex_id(x) + " is not in Q(G,V)";
      }
    }
    report.checks[2] = {"sources in Q(G,V)", ok, detail};
  }

  // (4) Delta g(x,.) = delta_x - mu
  {
    bool ok = report.checks[2].pass;
    std::string detail = ok ? "" : "skipped: sources invalid";
    for (int x = 0; x < n && ok; ++x) {
      Measure expected = Measure::dirac(g, x);
      expected -= system.mu;
      if (laplacian_of(g, system.source[x]) != expected) {
        ok = false;
        detail = "Laplacian of the source at " + g.vertex_id(x) +
                 " is not delta_x - mu";
      }
    }
    report.checks[3] = {"Laplacian identity", ok, detail};
  }

  // (5) integral of g(x,.) against mu vanishes
  {
    bool ok = report.checks[2].pass;
    std::string detail = ok ? "" : "skipped: sources invalid";
    for (int x = 0; x < n && ok; ++x) {
      Rat integral = integrate(g, system.source[x], system.mu);
      if (integral != 0) {
        ok = false;
        detail = "integral at " + g.vertex_id(x) + " is " + to_string(integral);
      }
    }
    report.checks[4] = {"mu-normalization", ok, detail};
  }

  // (6) g(D,y) + g(y,y) is the constant c, on vertices and a sample of
  // interior points (checked on the subdivided graph; mu and g_mu are
  // subdivision-invariant).
  {
    bool ok = true;
    std::string detail;
    for (int y = 0; y < n && ok; ++y) {
      Rat value = system.green_of_divisor(divisor, y) + system.green(y, y);
      if (value != system.c) {
        ok = false;
        detail = "g(D,y)+g(y,y) at " + g.vertex_id(y) + " is " +
                 to_string(value) + ", expected " + to_string(system.c);
      }
    }
    if (ok && divisor.degree() != -2) {
      std::vector<PointLocation> samples;
      for (int e = 0; e < g.edge_count() && samples.size() < 2; ++e) {
        samples.push_back(
            PointLocation::on_edge(g.edge(e).id, g.edge(e).length / 3));
      }
      for (const auto& p : samples) {
        auto sub = subdivide_at(g, {p});
        GreenSystem fine = green_system(
            sub.graph, divisor.extended_to(sub.graph.vertex_count()));
        const int y = sub.graph.vertex_index(sub.point_vertex[0]);
        Rat value = fine.green_of_divisor(fine.divisor, y) + fine.green(y, y);
        if (value != system.c) {
          ok = false;
          detail = "g(D,y)+g(y,y) at interior point of edge '" + p.id +
                   "' is " + to_string(value) + ", expected " +
                   to_string(system.c);
          break;
        }
      }
    }
    report.checks[5] = {"constant pairing with the divisor", ok, detail};
  }

  return report;
}

}  // namespace mgraph
