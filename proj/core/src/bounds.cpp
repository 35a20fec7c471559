#include "mgraph/bounds.hpp"

#include <cmath>
#include <string>

namespace mgraph {

namespace {

void require_genus_at_least_2(int genus) {
  if (genus < 2) {
    throw GenusTooSmall("genus " + std::to_string(genus) + " is below 2");
  }
}

}  // namespace

Rat chx_lower_bound(int genus, const Rat& pushforward_degree) {
  require_genus_at_least_2(genus);
  return Rat(4) * (genus - 1) * pushforward_degree / genus;
}

Rat noether_degree(const Rat& omega_sq, const Rat& delta) {
  return (omega_sq + delta) / 12;
}

BoundReport function_field_bounds(int genus, const Rat& delta) {
  require_genus_at_least_2(genus);
  if (delta < 0) {
    throw NegativeDelta("delta must be nonnegative, got " + to_string(delta));
  }
  BoundReport report;
  report.genus = genus;
  report.delta = delta;
  const Rat g(genus);
  report.omega_sq_lower = (g - 1) * delta / (2 * g + 1);
  report.admissible_omega_sq_lower =
      (g - 1) * (g - 1) * delta / (3 * g * (2 * g + 1));
  report.a_lower_sq = (g - 1) * delta / (12 * g * (2 * g + 1));
  if (report.a_lower_sq * 4 * (g - 1) != report.admissible_omega_sq_lower) {
    throw Error("internal: A^2 * 4(g-1) != admissible omega^2 lower bound");
  }
  report.a_lower = std::sqrt(to_double(report.a_lower_sq));
  report.assumes_irreducible_fibers = true;
  return report;
}

Rat admissible_omega_square(const Rat& omega_sq,
                            const std::vector<Rat>& local_terms) {
  Rat sum = omega_sq;
  for (const auto& term : local_terms) sum += term;
  return sum;
}

Rat nt_threshold(const Rat& admissible_omega_sq, int genus,
                 const Rat& nt_norm_sq) {
  require_genus_at_least_2(genus);
  if (nt_norm_sq < 0) {
    throw NegativeDelta("Neron-Tate squared norm must be nonnegative");
  }
  const Rat g(genus);
  return admissible_omega_sq / (4 * (g - 1)) + nt_norm_sq / (4 * g * (g - 1));
}

ArithmeticBounds arithmetic_bounds(
    int genus, const std::vector<ArithmeticFiberDatum>& fibers,
    const std::vector<long>& reducible_places) {
  require_genus_at_least_2(genus);
  for (const auto& fiber : fibers) {
    if (fiber.residue_cardinality < 2) {
      throw BadResidueCardinality("residue cardinality must be >= 2, got " +
                                  std::to_string(fiber.residue_cardinality));
    }
    if (fiber.delta < 1) {
      throw NegativeDelta("fiber singularity count must be positive");
    }
  }
  for (long n : reducible_places) {
    if (n < 2) {
      throw BadResidueCardinality("residue cardinality must be >= 2, got " +
                                  std::to_string(n));
    }
  }

  ArithmeticBounds bounds;
  const double g = genus;
  double irreducible = 0.0;
  for (const auto& fiber : fibers) {
    irreducible += (g - 1) / (3 * g) * static_cast<double>(fiber.delta) *
                   std::log(static_cast<double>(fiber.residue_cardinality));
  }
  bounds.irreducible_fibers_bound = irreducible;

  double reducible = 0.0;
  for (long n : reducible_places) {
    reducible += std::log(static_cast<double>(n)) / (6 * (g - 1));
  }
  bounds.reducible_places_bound = reducible;

  bounds.not_smooth_floor = std::log(2.0) / (6 * (g - 1));
  bounds.assumes_irreducible_fibers = true;
  return bounds;
}

}  // namespace mgraph
