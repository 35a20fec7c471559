#include "mgraph/wedge.hpp"

#include <string>

#include "mgraph/errors.hpp"

namespace mgraph {

Rat WedgeSpec::total_length() const {
  Rat sum(0);
  for (const auto& l : lengths) sum += l;
  return sum;
}

WedgeSpec make_wedge(std::vector<Rat> lengths, int genus) {
  if (lengths.empty()) {
    throw EmptyGraph("a wedge needs at least one circle");
  }
  for (const auto& l : lengths) {
    if (l <= 0) {
      throw NonpositiveLength("circle length " + to_string(l) +
                              " is not positive");
    }
  }
  if (genus < 1) {
    throw GenusTooSmall("wedge parameter g must be a positive integer");
  }
  return WedgeSpec{std::move(lengths), genus};
}

Rat circle_phi(const Rat& l, const Rat& t) {
  if (l <= 0) {
    throw NonpositiveLength("circle length " + to_string(l) +
                            " is not positive");
  }
  Rat r = mod_positive(t, l);
  return r * r / (2 * l) - r / 2;
}

MetrizedGraph wedge_graph(const WedgeSpec& spec) {
  std::vector<EdgeSpec> edges;
  edges.reserve(spec.lengths.size());
  for (int i = 0; i < spec.circle_count(); ++i) {
    edges.push_back(
        EdgeSpec{"c" + std::to_string(i + 1), "O", "O", spec.lengths[i]});
  }
  return MetrizedGraph::build({"O"}, std::move(edges));
}

VertexDivisor wedge_divisor(const WedgeSpec& spec, const MetrizedGraph& g) {
  VertexDivisor k(g);
  k[g.vertex_index("O")] = 2 * spec.genus - 2;
  return k;
}

Measure wedge_measure(const WedgeSpec& spec) {
  MetrizedGraph g = wedge_graph(spec);
  Measure mu = Measure::zero(g);
  mu.vertex_mass[0] = Rat(spec.genus - spec.circle_count(), spec.genus);
  mu.vertex_mass[0].canonicalize();
  for (int i = 0; i < spec.circle_count(); ++i) {
    mu.edge_density[i] = Rat(1) / (spec.genus * spec.lengths[i]);
  }
  return mu;
}

namespace {

void check_circle_index(const WedgeSpec& spec, const WedgePoint& p) {
  if (p.circle < 0 || p.circle >= spec.circle_count()) {
    throw IndexOutOfRange("circle index " + std::to_string(p.circle + 1) +
                          " out of range 1.." +
                          std::to_string(spec.circle_count()));
  }
}

}  // namespace

Rat wedge_green(const WedgeSpec& spec, const WedgePoint& x,
                const WedgePoint& y) {
  check_circle_index(spec, x);
  check_circle_index(spec, y);
  const int g = spec.genus;
  const Rat shift = spec.total_length() / (Rat(12) * g * g);

  const Rat xi = mod_positive(x.t, spec.lengths[x.circle]);
  const Rat yj = mod_positive(y.t, spec.lengths[y.circle]);
  // A coordinate of 0 is the wedge point, which lies on every circle.
  const bool same_circle = x.circle == y.circle || xi == 0 || yj == 0;
  if (same_circle) {
    const int i = xi == 0 ? y.circle : x.circle;
    const Rat& l = spec.lengths[i];
    Rat ratio(g - 1, g);
    ratio.canonicalize();
    return circle_phi(l, xi - yj) -
           ratio * (circle_phi(l, xi) + circle_phi(l, yj)) + shift;
  }
  return (circle_phi(spec.lengths[x.circle], xi) +
          circle_phi(spec.lengths[y.circle], yj)) /
             g +
         shift;
}

Rat wedge_constant(const WedgeSpec& spec) {
  const int g = spec.genus;
  return spec.total_length() * (2 * g - 1) / (Rat(12) * g * g);
}

}  // namespace mgraph
