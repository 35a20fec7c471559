#pragma once

#include <vector>

#include "mgraph/errors.hpp"
#include "mgraph/rational.hpp"

namespace mgraph {

/// Lower bounds extracted from a genus and a singularity count delta.
/// Rational parts are exact; a_lower carries the only floating-point step
/// (a square root of an exact rational).
struct BoundReport {
  int genus = 2;
  Rat delta;
  Rat omega_sq_lower;             // (g-1) delta / (2g+1)
  Rat admissible_omega_sq_lower;  // (g-1)^2 delta / (3g(2g+1))
  Rat a_lower_sq;                 // (g-1) delta / (12g(2g+1)), exact
  double a_lower = 0.0;           // sqrt(a_lower_sq)
  bool assumes_irreducible_fibers = true;
};

/// omega^2 >= 4(g-1)/g * deg f_*(omega). Throws GenusTooSmall (g < 2).
Rat chx_lower_bound(int genus, const Rat& pushforward_degree);

/// deg f_*(omega) = (omega^2 + delta) / 12.
Rat noether_degree(const Rat& omega_sq, const Rat& delta);

/// The full function-field bound chain for (g, delta). The exact identity
/// a_lower_sq * 4(g-1) == admissible_omega_sq_lower is asserted before the
/// square root is taken. Throws GenusTooSmall, NegativeDelta.
BoundReport function_field_bounds(int genus, const Rat& delta);

/// (omega^a . omega^a)_a = omega^2 + sum of per-fiber local terms.
Rat admissible_omega_square(const Rat& omega_sq,
                            const std::vector<Rat>& local_terms);

/// Generic lower bound for squared distances to a degree-1 class:
/// admissible_omega_sq / (4(g-1)) + nt_norm_sq / (4g(g-1)).
/// Throws GenusTooSmall, NegativeDelta (nt_norm_sq < 0).
Rat nt_threshold(const Rat& admissible_omega_sq, int genus,
                 const Rat& nt_norm_sq);

/// One singular fiber of an arithmetic surface: its singularity count and
/// the cardinality of the residue field at the place.
struct ArithmeticFiberDatum {
  long delta = 1;                // > 0
  long residue_cardinality = 2;  // >= 2
};

struct ArithmeticBounds {
  /// sum_i (g-1)/(3g) delta_i log N_i  (stable model with irreducible fibers)
  double irreducible_fibers_bound = 0.0;
  /// sum_i log N_i / (6(g-1)) over places with reducible fibers
  double reducible_places_bound = 0.0;
  /// log 2 / (6(g-1)), valid as soon as the surface is not smooth
  double not_smooth_floor = 0.0;
  bool assumes_irreducible_fibers = true;
};

/// Arithmetic-surface lower bounds on (omega . omega). Rational factors are
/// exact; logarithms are evaluated in double precision (~15-16 significant
/// digits). Throws GenusTooSmall, BadResidueCardinality.
ArithmeticBounds arithmetic_bounds(
    int genus, const std::vector<ArithmeticFiberDatum>& fibers,
    const std::vector<long>& reducible_places);

}  // namespace mgraph
