#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "entopt/optimality.hpp"

namespace entopt {

enum class Target { Min, Max };

enum class Classification { Minimum, Maximum, Saddle, BoundaryFlat };

struct OptimizeConfig {
  int starts = 8;        // eigenbasis of rho^C + (starts-1) seeded Haar randoms
  int max_iter = 250;
  double tol = 1e-8;     // convergence threshold on max |sbar1|
  std::uint64_t seed = 0;
  // Extra initial bases tried between the eigenbasis and the random starts;
  // used to warm-start ancilla chains so bounds can only improve.
  std::vector<CMatrix> warm_starts;
};

struct OptimizeResult {
  Target target = Target::Min;
  double value = 0.0;  // bits
  MeasurementBasis basis;
  int iterations = 0;   // spent by the winning start
  double residual = 0.0;  // max |sbar1| at the winning basis
  std::optional<Classification> classification;  // set when converged
  bool converged = false;
  int starts = 0;
  std::vector<double> per_start_values;  // start order: eigenbasis, warm, random
};

// Extremize the average entropy over measurement bases on C by repeatedly
// rotating along the ET direction with the largest |sbar1|, with an exact-
// rotation line search. Deterministic for fixed config.
OptimizeResult optimize(const TripartiteState& state, Target target,
                        const OptimizeConfig& config = {});

// Second-difference probe at a stationary basis: average entropy evaluated at
// +-delta along every ET direction. All increases -> Minimum, all decreases ->
// Maximum, both -> Saddle, none beyond 1e-10 -> BoundaryFlat. Throws
// NotStationary if the basis fails check_optimality at 1e-6.
Classification classify_stationary(const TripartiteState& state, const MeasurementBasis& basis,
                                   double delta = 1e-3);

struct Extrema {
  double min = 0.0;
  double max = 0.0;
};

// Dense (theta, phi) scan for a qubit C, refined around both grid extrema by
// coordinate golden-section search. Independent of the ET machinery, so it
// serves as an oracle for optimize.
Extrema brute_force_qubit(const TripartiteState& state, int grid_n);

}  // namespace entopt
