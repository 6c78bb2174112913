#pragma once

#include <vector>

#include "entopt/perturbation.hpp"

namespace entopt {

struct PairResidual {
  int i = 0;
  int j = 0;
  ETKind kind = ETKind::Real;
  double sbar1 = 0.0;
};

// Stationarity report for a measurement basis: the first-order change of the
// average entropy along every probed ET direction.
struct OptimalityReport {
  bool stationary = false;
  int worst_i = -1;  // -1 when no direction qualifies (rank-1 rho^C)
  int worst_j = -1;
  ETKind worst_kind = ETKind::Real;
  double worst_residual = 0.0;  // max |sbar1| over probed directions
  std::vector<PairResidual> per_pair;
  double tolerance = 0.0;
};

inline constexpr double kStationaryTol = 1e-7;

// Probes every unordered column pair with both probabilities > kProbTol, for
// both ET kinds. Stationary iff all |sbar1| <= tolerance.
OptimalityReport check_optimality(const TripartiteState& state, const MeasurementBasis& basis,
                                  double tolerance = kStationaryTol);

// Stationarity of the rho^C eigenbasis via the reduced condition that holds
// there (the cross terms k vanish): the basis is stationary along real ETs
// iff Tr[Delta_ij log2 rho^A(xi_i)] = Tr[Delta_ji log2 rho^A(xi_j)] for every
// qualifying pair. Per pair the report carries the signed first-order change
// 2*sqrt(p_i p_j) * (difference of those traces), computed without the
// general perturbation machinery. Zero-eigenvalue spectral terms are dropped.
OptimalityReport check_eigenbasis_condition(const TripartiteState& state,
                                            double tolerance = kStationaryTol);

}  // namespace entopt
