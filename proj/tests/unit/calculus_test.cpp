#include <doctest.h>

#include "mgraph/calculus.hpp"
#include "mgraph/errors.hpp"
#include "support/generators.hpp"

using namespace mgraph;

namespace {

MetrizedGraph segment(const Rat& length) {
  return MetrizedGraph::build({"v1", "v2"},
                              {EdgeSpec{"e1", "v1", "v2", length}});
}

MetrizedGraph circle(const Rat& length) {
  return MetrizedGraph::build({"O"}, {EdgeSpec{"c1", "O", "O", length}});
}

MetrizedGraph parallel_unit_edges() {
  return MetrizedGraph::build(
      {"v1", "v2"},
      {EdgeSpec{"e1", "v1", "v2", Rat(1)}, EdgeSpec{"e2", "v1", "v2", Rat(1)}});
}

// phi(t) = t^2/2 - t/2 on the unit circle, as an edge polynomial.
PiecewiseQuadratic unit_circle_phi() {
  return PiecewiseQuadratic({EdgePoly{Rat(1, 2), Rat(-1, 2), Rat(0)}});
}

}  // namespace

TEST_SUITE("laplacian-calculus") {
  TEST_CASE("dirac of a linear ramp on a segment") {
    MetrizedGraph g = segment(Rat(3));
    PiecewiseQuadratic f({EdgePoly{Rat(0), Rat(1), Rat(0)}});  // f(t) = t
    VertexVector d = dirac_of(g, f);
    CHECK(d[0] == 1);
    CHECK(d[1] == -1);
  }

  TEST_CASE("dirac of phi on the unit circle") {
    MetrizedGraph g = circle(Rat(1));
    VertexVector d = dirac_of(g, unit_circle_phi());
    CHECK(d[0] == -1);  // -1/2 from each branch
  }

  TEST_CASE("dirac of a constant vanishes") {
    MetrizedGraph g = parallel_unit_edges();
    PiecewiseQuadratic f({EdgePoly{Rat(0), Rat(0), Rat(5)},
                          EdgePoly{Rat(0), Rat(0), Rat(5)}});
    VertexVector d = dirac_of(g, f);
    CHECK(d[0] == 0);
    CHECK(d[1] == 0);
  }

  TEST_CASE("dirac rejects discontinuous input") {
    MetrizedGraph g = parallel_unit_edges();
    PiecewiseQuadratic f({EdgePoly{Rat(0), Rat(0), Rat(0)},
                          EdgePoly{Rat(0), Rat(0), Rat(1)}});
    CHECK_THROWS_AS(dirac_of(g, f), DiscontinuousFunction);
  }

  TEST_CASE("laplacian of phi is a point mass minus the uniform measure") {
    MetrizedGraph g = circle(Rat(1));
    Measure m = laplacian_of(g, unit_circle_phi());
    CHECK(m.vertex_mass[0] == 1);
    CHECK(m.edge_density[0] == -1);
    CHECK(m.total_mass(g) == 0);
  }

  TEST_CASE("laplacian of a linear function on a segment") {
    MetrizedGraph g = segment(Rat(2));
    PiecewiseQuadratic f({EdgePoly{Rat(0), Rat(3, 2), Rat(1)}});
    Measure m = laplacian_of(g, f);
    CHECK(m.vertex_mass[0] == Rat(-3, 2));
    CHECK(m.vertex_mass[1] == Rat(3, 2));
    CHECK(m.edge_density[0] == 0);
  }

  TEST_CASE("laplacian of a bump vanishing at the endpoints") {
    // f(t) = a t(t - l) gives a l at each endpoint and density -2a.
    const Rat a(3, 4);
    const Rat l(2);
    MetrizedGraph g = segment(l);
    PiecewiseQuadratic f({EdgePoly{a, -a * l, Rat(0)}});
    Measure m = laplacian_of(g, f);
    CHECK(m.vertex_mass[0] == a * l);
    CHECK(m.vertex_mass[1] == a * l);
    CHECK(m.edge_density[0] == -2 * a);
  }

  TEST_CASE("q of a Dirac is an indicator") {
    MetrizedGraph g = parallel_unit_edges();
    VertexVector q = q_map(g, Measure::dirac(g, 1));
    CHECK(q[0] == 0);
    CHECK(q[1] == 1);
  }

  TEST_CASE("q of Lebesgue measure splits edge mass between the endpoints") {
    MetrizedGraph g = segment(Rat(2));
    Measure m = Measure::zero(g);
    m.edge_density[0] = 1;
    VertexVector q = q_map(g, m);
    CHECK(q[0] == 1);
    CHECK(q[1] == 1);
  }

  TEST_CASE("q on the parallel-edge fiber measure") {
    MetrizedGraph g = parallel_unit_edges();
    Measure m = Measure::zero(g);
    m.vertex_mass[0] = Rat(1, 2);
    m.edge_density[0] = Rat(1, 4);
    m.edge_density[1] = Rat(1, 4);
    VertexVector q = q_map(g, m);
    CHECK(q[0] == Rat(3, 4));
    CHECK(q[1] == Rat(1, 4));
  }

  TEST_CASE("q preserves total mass on loops") {
    MetrizedGraph g = circle(Rat(5, 3));
    Measure m = Measure::zero(g);
    m.edge_density[0] = Rat(3);
    VertexVector q = q_map(g, m);
    CHECK(q[0] == m.total_mass(g));
  }

  TEST_CASE("p restricts to vertex values") {
    MetrizedGraph g = segment(Rat(3, 2));
    PiecewiseQuadratic f({EdgePoly{Rat(0), Rat(1), Rat(0)}});
    VertexVector p = p_map(g, f);
    CHECK(p[0] == 0);
    CHECK(p[1] == Rat(3, 2));

    VertexVector constant = p_map(
        g, PiecewiseQuadratic({EdgePoly{Rat(0), Rat(0), Rat(5)}}));
    CHECK(constant[0] == 5);
    CHECK(constant[1] == 5);

    VertexVector phi = p_map(circle(Rat(1)), unit_circle_phi());
    CHECK(phi[0] == 0);
  }

  TEST_CASE("laplacian matrix of a segment") {
    RatMatrix lap = laplacian_matrix(segment(Rat(2)));
    CHECK(lap(0, 0) == Rat(1, 2));
    CHECK(lap(0, 1) == Rat(-1, 2));
    CHECK(lap(1, 0) == Rat(-1, 2));
    CHECK(lap(1, 1) == Rat(1, 2));
  }

  TEST_CASE("laplacian matrix adds parallel conductances") {
    RatMatrix lap = laplacian_matrix(parallel_unit_edges());
    CHECK(lap(0, 0) == 2);
    CHECK(lap(0, 1) == -2);
  }

  TEST_CASE("laplacian matrix ignores loops") {
    RatMatrix lap = laplacian_matrix(circle(Rat(1)));
    CHECK(lap.rows() == 1);
    CHECK(lap(0, 0) == 0);
  }

  TEST_CASE("laplacian matrix is symmetric with zero row sums") {
    testing::Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng);
      RatMatrix lap = laplacian_matrix(g);
      CHECK(lap.is_symmetric());
      for (int i = 0; i < lap.rows(); ++i) {
        Rat row_sum(0);
        for (int j = 0; j < lap.cols(); ++j) row_sum += lap(i, j);
        CHECK(row_sum == 0);
        CHECK(lap(i, i) >= 0);
      }
    }
  }

  TEST_CASE("integrating the constant 1 against a probability measure") {
    MetrizedGraph g = parallel_unit_edges();
    Measure m = Measure::zero(g);
    m.vertex_mass[0] = Rat(1, 2);
    m.edge_density[0] = Rat(1, 4);
    m.edge_density[1] = Rat(1, 4);
    PiecewiseQuadratic one({EdgePoly{Rat(0), Rat(0), Rat(1)},
                            EdgePoly{Rat(0), Rat(0), Rat(1)}});
    CHECK(integrate(g, one, m) == 1);
  }

  TEST_CASE("integrating phi against the uniform circle measure") {
    for (const Rat& l : {Rat(1), Rat(2), Rat(7, 3)}) {
      MetrizedGraph g = circle(l);
      PiecewiseQuadratic phi(
          {EdgePoly{Rat(1) / (2 * l), Rat(-1, 2), Rat(0)}});
      Measure m = Measure::zero(g);
      m.edge_density[0] = Rat(1) / l;
      CHECK(integrate(g, phi, m) == -l / 12);
    }
  }

  TEST_CASE("integrating against a Dirac evaluates the function") {
    MetrizedGraph g = segment(Rat(1));
    PiecewiseQuadratic f({EdgePoly{Rat(0), Rat(1), Rat(0)}});
    CHECK(integrate(g, f, Measure::dirac(g, 1)) == 1);
  }

  TEST_CASE("poisson solve on a segment") {
    MetrizedGraph g = segment(Rat(2));
    Measure target = Measure::zero(g);
    target.vertex_mass[0] = Rat(1, 2);
    target.vertex_mass[1] = Rat(-1, 2);
    PiecewiseQuadratic f = solve_poisson(g, target, 0);
    CHECK(f.on_edge(0).c2 == 0);
    CHECK(f.on_edge(0).c1 == Rat(-1, 2));
    CHECK(f.on_edge(0).c0 == 0);
    CHECK(laplacian_of(g, f) == target);
  }

  TEST_CASE("poisson solve of the zero measure is the zero function") {
    MetrizedGraph g = parallel_unit_edges();
    PiecewiseQuadratic f = solve_poisson(g, Measure::zero(g), 1);
    CHECK(f == PiecewiseQuadratic::zero(g));
  }

  TEST_CASE("poisson solve recovers phi on the circle") {
    MetrizedGraph g = circle(Rat(1));
    Measure target = Measure::dirac(g, 0);
    target.edge_density[0] = -1;
    PiecewiseQuadratic f = solve_poisson(g, target, 0);
    CHECK(f == unit_circle_phi());
  }

  TEST_CASE("poisson solve rejects nonzero total mass") {
    MetrizedGraph g = segment(Rat(1));
    CHECK_THROWS_AS(solve_poisson(g, Measure::dirac(g, 0), 0), NonzeroMass);
  }

  TEST_CASE("commutativity q(laplacian(f)) == L p(f)") {
    testing::Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng);
      PiecewiseQuadratic f = testing::random_quadratic(rng, g);
      CHECK(q_map(g, laplacian_of(g, f)) ==
            laplacian_matrix(g).multiply(p_map(g, f)));
    }
  }

  TEST_CASE("laplacian always has total mass zero") {
    testing::Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng);
      PiecewiseQuadratic f = testing::random_quadratic(rng, g);
      CHECK(laplacian_of(g, f).total_mass(g) == 0);
    }
  }

  TEST_CASE("poisson then laplacian is the identity on zero-mass measures") {
    testing::Rng rng(44);
    for (int trial = 0; trial < 40; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng);
      Measure target = testing::random_zero_mass_measure(rng, g);
      const int base = rng.uniform(0, g.vertex_count() - 1);
      PiecewiseQuadratic f = solve_poisson(g, target, base);
      CHECK(laplacian_of(g, f) == target);
      CHECK(p_map(g, f)[base] == 0);
    }
  }

  TEST_CASE("poisson solves for different bases differ by a constant") {
    testing::Rng rng(45);
    for (int trial = 0; trial < 25; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng);
      if (g.vertex_count() < 2) continue;
      Measure target = testing::random_zero_mass_measure(rng, g);
      PiecewiseQuadratic f0 = solve_poisson(g, target, 0);
      PiecewiseQuadratic f1 = solve_poisson(g, target, g.vertex_count() - 1);
      const Rat shift = p_map(g, f0)[0] - p_map(g, f1)[0];
      f1.add_constant(shift);
      CHECK(f0 == f1);
    }
  }
}
