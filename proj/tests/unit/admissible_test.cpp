#include <doctest.h>

#include "mgraph/admissible.hpp"
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

MetrizedGraph wedge_of_unit_circles(int n) {
  std::vector<EdgeSpec> loops;
  for (int i = 1; i <= n; ++i) {
    loops.push_back(EdgeSpec{"c" + std::to_string(i), "O", "O", Rat(1)});
  }
  return MetrizedGraph::build({"O"}, std::move(loops));
}

MetrizedGraph scaled(const MetrizedGraph& g, const Rat& factor) {
  std::vector<EdgeSpec> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    edges.push_back(EdgeSpec{g.edge(e).id, g.vertex_id(g.edge(e).tail),
                             g.vertex_id(g.edge(e).head),
                             g.edge(e).length * factor});
  }
  return MetrizedGraph::build(g.vertex_ids(), std::move(edges));
}

}  // namespace

TEST_SUITE("admissible") {
  TEST_CASE("resistance of a segment is its length") {
    for (const Rat& l : {Rat(1), Rat(5, 2), Rat(7, 3)}) {
      CHECK(effective_resistance(segment(l), PointLocation::at_vertex("v1"),
                                 PointLocation::at_vertex("v2")) == l);
    }
  }

  TEST_CASE("resistance of parallel unit edges") {
    CHECK(effective_resistance(parallel_unit_edges(),
                               PointLocation::at_vertex("v1"),
                               PointLocation::at_vertex("v2")) == Rat(1, 2));
  }

  TEST_CASE("resistance across a circle") {
    CHECK(effective_resistance(circle(Rat(1)), PointLocation::at_vertex("O"),
                               PointLocation::on_edge("c1", Rat(1, 2))) ==
          Rat(1, 4));
    CHECK(effective_resistance(circle(Rat(1)), PointLocation::at_vertex("O"),
                               PointLocation::at_vertex("O")) == 0);
  }

  TEST_CASE("canonical measure of a circle is the uniform measure") {
    Measure mu = canonical_measure(circle(Rat(3, 2)));
    CHECK(mu.vertex_mass[0] == 0);
    CHECK(mu.edge_density[0] == Rat(2, 3));
  }

  TEST_CASE("canonical measure of a segment sits on the endpoints") {
    Measure mu = canonical_measure(segment(Rat(5)));
    CHECK(mu.vertex_mass[0] == Rat(1, 2));
    CHECK(mu.vertex_mass[1] == Rat(1, 2));
    CHECK(mu.edge_density[0] == 0);
  }

  TEST_CASE("canonical measure of a wedge of circles") {
    const int n = 3;
    Measure mu = canonical_measure(wedge_of_unit_circles(n));
    CHECK(mu.vertex_mass[0] == 1 - n);
    for (int i = 0; i < n; ++i) CHECK(mu.edge_density[i] == 1);
    CHECK(mu.total_mass(wedge_of_unit_circles(n)) == 1);
  }

  TEST_CASE("admissible measure of the wedge matches the closed form") {
    const int n = 2, g = 2;
    MetrizedGraph wedge = wedge_of_unit_circles(n);
    VertexDivisor k(wedge);
    k[0] = 2 * g - 2;
    Measure mu = admissible_measure(wedge, k);
    CHECK(mu.vertex_mass[0] == 0);  // (g - n)/g with g = n = 2
    for (int i = 0; i < n; ++i) CHECK(mu.edge_density[i] == Rat(1, g));
  }

  TEST_CASE("canonical density agrees with the deleted-edge construction") {
    testing::Rng rng(4);
    for (int trial = 0; trial < 15; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng, 6, 10);
      Measure mu = canonical_measure(g);
      for (int e = 0; e < g.edge_count(); ++e) {
        Rat resistance;
        if (deleted_edge_resistance(g, e, resistance)) {
          CHECK(mu.edge_density[e] ==
                Rat(1) / (g.edge(e).length + resistance));
        } else {
          CHECK(mu.edge_density[e] == 0);  // bridge
        }
      }
    }
  }

  TEST_CASE("admissible measure of a segment with endpoint divisor") {
    MetrizedGraph g = segment(Rat(2));
    VertexDivisor d(g);
    d[0] = 1;
    d[1] = 1;
    Measure mu = admissible_measure(g, d);
    CHECK(mu.vertex_mass[0] == Rat(1, 2));
    CHECK(mu.vertex_mass[1] == Rat(1, 2));
    CHECK(mu.edge_density[0] == 0);
  }

  TEST_CASE("admissible measure with zero divisor is the canonical measure") {
    testing::Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng);
      CHECK(admissible_measure(g, VertexDivisor(g)) == canonical_measure(g));
      // An empty coefficient vector means the zero divisor.
      CHECK(admissible_measure(g, VertexDivisor()) == canonical_measure(g));
    }
  }

  TEST_CASE("degree -2 is rejected") {
    MetrizedGraph g = segment(Rat(1));
    VertexDivisor d(g);
    d[0] = -1;
    d[1] = -1;
    CHECK_THROWS_AS(admissible_measure(g, d), DegreeMinusTwo);
    CHECK_THROWS_AS(green_system(g, d), DegreeMinusTwo);
    CHECK_THROWS_AS(green_eval(g, d, PointLocation::at_vertex("v1"),
                               PointLocation::at_vertex("v2")),
                    DegreeMinusTwo);
  }

  TEST_CASE("green system on the circle with zero divisor") {
    MetrizedGraph g = circle(Rat(1));
    GreenSystem sys = green_system(g, VertexDivisor(g));
    CHECK(sys.green(0, 0) == Rat(1, 12));
    CHECK(sys.c == Rat(1, 12));
  }

  TEST_CASE("green system on parallel edges with divisor 2 v1") {
    MetrizedGraph g = parallel_unit_edges();
    VertexDivisor d(g);
    d[0] = 2;
    GreenSystem sys = green_system(g, d);
    CHECK(sys.green(0, 0) == Rat(1, 24));
    CHECK(sys.green(0, 1) == Rat(-1, 12));
    CHECK(sys.green(1, 1) == Rat(7, 24));
    CHECK(sys.c == Rat(1, 8));
  }

  TEST_CASE("green system on the wedge of two unit circles") {
    MetrizedGraph g = wedge_of_unit_circles(2);
    VertexDivisor d(g);
    d[0] = 2;  // K = (2g-2) O with g = 2
    GreenSystem sys = green_system(g, d);
    CHECK(sys.green(0, 0) == Rat(1, 24));  // L/(12 g^2)
    CHECK(sys.c == Rat(1, 8));             // L(2g-1)/(12 g^2)
  }

  TEST_CASE("green_eval at an interior point of a one-circle wedge") {
    MetrizedGraph g = circle(Rat(1));
    VertexDivisor d(g);
    d[0] = 2;  // g = 2
    CHECK(green_eval(g, d, PointLocation::at_vertex("O"),
                     PointLocation::on_edge("c1", Rat(1, 2))) == Rat(-1, 24));
  }

  TEST_CASE("green_eval is symmetric") {
    MetrizedGraph g = parallel_unit_edges();
    VertexDivisor d(g);
    d[0] = 2;
    PointLocation x = PointLocation::at_vertex("v1");
    PointLocation y = PointLocation::at_vertex("v2");
    CHECK(green_eval(g, d, x, y) == Rat(-1, 12));
    CHECK(green_eval(g, d, y, x) == Rat(-1, 12));
  }

  TEST_CASE("green_eval at the wedge point") {
    MetrizedGraph g = wedge_of_unit_circles(2);
    VertexDivisor d(g);
    d[0] = 2;
    PointLocation o = PointLocation::at_vertex("O");
    CHECK(green_eval(g, d, o, o) == Rat(1, 24));
  }

  TEST_CASE("verification passes on freshly built systems") {
    testing::Rng rng(100);
    for (int trial = 0; trial < 10; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng, 6, 9);
      VertexDivisor d = testing::random_divisor(rng, g);
      GreenSystem sys = green_system(g, d);
      PropertyReport report = verify_admissibility(g, d, sys);
      CHECK(report.all_pass());
    }
  }

  TEST_CASE("verification flags a scaled measure") {
    MetrizedGraph g = parallel_unit_edges();
    VertexDivisor d(g);
    d[0] = 2;
    GreenSystem sys = green_system(g, d);
    sys.mu *= Rat(2);
    PropertyReport report = verify_admissibility(g, d, sys);
    CHECK(!report.checks[0].pass);  // total mass
    CHECK(!report.checks[3].pass);  // Laplacian identity
    CHECK(report.checks[4].pass);   // integral of 0 scales to 0
    CHECK(!report.all_pass());
  }

  TEST_CASE("verification flags a perturbed Green value") {
    MetrizedGraph g = parallel_unit_edges();
    VertexDivisor d(g);
    d[0] = 2;
    GreenSystem sys = green_system(g, d);
    sys.green(0, 1) += Rat(1, 100);
    PropertyReport report = verify_admissibility(g, d, sys);
    CHECK((!report.checks[1].pass || !report.checks[5].pass));
    CHECK(!report.all_pass());
  }

  TEST_CASE("two independent constructions agree") {
    testing::Rng rng(101);
    for (int trial = 0; trial < 8; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng, 6, 9);
      VertexDivisor d = testing::random_divisor(rng, g);
      GreenSystem sys = green_system(g, d);

      // Rebuild each source from solve_poisson with a different base vertex
      // and renormalize; uniqueness forces exact agreement.
      Measure mu = admissible_measure(g, d);
      const int base = g.vertex_count() - 1;
      for (int x = 0; x < g.vertex_count(); ++x) {
        Measure target = Measure::dirac(g, x);
        target -= mu;
        PiecewiseQuadratic f = solve_poisson(g, target, base);
        f.add_constant(-integrate(g, f, mu));
        CHECK(f == sys.source[x]);
      }
    }
  }

  TEST_CASE("resistance identity links Green values and resistance") {
    testing::Rng rng(102);
    for (int trial = 0; trial < 10; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng, 6, 9);
      VertexDivisor d = testing::random_divisor(rng, g);
      GreenSystem sys = green_system(g, d);
      for (int x = 0; x < g.vertex_count(); ++x) {
        for (int y = x; y < g.vertex_count(); ++y) {
          Rat resistance = effective_resistance(
              g, PointLocation::at_vertex(g.vertex_id(x)),
              PointLocation::at_vertex(g.vertex_id(y)));
          CHECK(sys.green(x, x) + sys.green(y, y) - 2 * sys.green(x, y) ==
                resistance);
        }
      }
    }
  }

  TEST_CASE("scaling the metric scales Green values and fixes q(mu)") {
    testing::Rng rng(103);
    const Rat lambdas[] = {Rat(1, 2), Rat(3), Rat(7, 5)};
    for (int trial = 0; trial < 6; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng, 5, 8);
      VertexDivisor d = testing::random_divisor(rng, g);
      GreenSystem sys = green_system(g, d);
      for (const Rat& lambda : lambdas) {
        MetrizedGraph h = scaled(g, lambda);
        GreenSystem scaled_sys = green_system(h, d);
        for (int x = 0; x < g.vertex_count(); ++x) {
          for (int y = 0; y < g.vertex_count(); ++y) {
            CHECK(scaled_sys.green(x, y) == lambda * sys.green(x, y));
          }
        }
        CHECK(scaled_sys.c == lambda * sys.c);
        CHECK(q_map(h, scaled_sys.mu) == q_map(g, sys.mu));
      }
    }
  }

  TEST_CASE("positivity holds whenever d_v >= v(v) - 2") {
    testing::Rng rng(104);
    int hits = 0;
    for (int trial = 0; trial < 60; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng, 5, 8);
      VertexDivisor d(g);
      for (int v = 0; v < g.vertex_count(); ++v) {
        d[v] = g.valence(v) - 2 + rng.uniform(0, 2);
      }
      if (d.degree() == -2) continue;
      ++hits;
      CHECK(admissible_measure(g, d).is_nonnegative());
    }
    CHECK(hits > 30);
  }

  TEST_CASE("negative-mass measures are produced, not rejected") {
    // Wedge of 3 circles with g = 2 < n fails the positivity hypothesis.
    MetrizedGraph g = wedge_of_unit_circles(3);
    VertexDivisor d(g);
    d[0] = 2;
    Measure mu = admissible_measure(g, d);
    CHECK(mu.vertex_mass[0] == Rat(-1, 2));
    CHECK(!mu.is_nonnegative());
    CHECK(mu.total_mass(g) == 1);
  }

  TEST_CASE("green values are invariant under subdivision") {
    testing::Rng rng(105);
    for (int trial = 0; trial < 8; ++trial) {
      MetrizedGraph g = testing::random_connected_graph(rng, 5, 8);
      VertexDivisor d = testing::random_divisor(rng, g);
      GreenSystem sys = green_system(g, d);

      const int e = rng.uniform(0, g.edge_count() - 1);
      Rat offset = g.edge(e).length * Rat(rng.uniform(1, 4), 5);
      offset.canonicalize();
      auto sub = subdivide_at(g, {PointLocation::on_edge(g.edge(e).id, offset)});
      GreenSystem fine =
          green_system(sub.graph, d.extended_to(sub.graph.vertex_count()));
      for (int x = 0; x < g.vertex_count(); ++x) {
        for (int y = 0; y < g.vertex_count(); ++y) {
          CHECK(fine.green(x, y) == sys.green(x, y));
        }
      }
      CHECK(fine.c == sys.c);
    }
  }
}
