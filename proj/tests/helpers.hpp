#pragma once

// Shared fixtures for the test suite.

#include <cstdint>
#include <random>

#include "entopt/measurement.hpp"
#include "entopt/perturbation.hpp"
#include "entopt/states.hpp"

namespace entopt::test {

inline MeasurementBasis seeded_basis(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return MeasurementBasis(haar_random_unitary(dim, rng));
}

inline double mdiff(const CMatrix& a, const CMatrix& b) { return max_abs(a - b); }

// Central finite difference of the average entropy along an ET.
inline double fd_sbar(const TripartiteState& state, const MeasurementBasis& basis,
                      const ETDirection& dir, double h) {
  const double plus = average_entropy(state, apply_et(basis, dir, h));
  const double minus = average_entropy(state, apply_et(basis, dir, -h));
  return (plus - minus) / (2.0 * h);
}

// True when every branch probability and every nonvanishing branch-RDM
// eigenvalue stays above the floor, so finite differences of the entropy are
// numerically trustworthy at step 1e-5.
inline bool well_conditioned(const TripartiteState& state, const MeasurementBasis& basis,
                             double floor = 1e-2) {
  const Decomposition d = decompose(state, basis);
  if (static_cast<int>(d.branches.size()) != state.dim_c()) return false;
  for (const Branch& br : d.branches) {
    if (br.probability < floor) return false;
    const auto eig =
        hermitian_eig(bipartite_branch_rdm(br.state, d.dim_a, d.dim_b).matrix());
    const int support = std::min(d.dim_a, d.dim_b);  // rank cap of a branch RDM
    for (int k = 0; k < support; ++k) {
      if (eig.eigenvalues[k] < floor) return false;
    }
  }
  return true;
}

// Deterministic stream of well-conditioned cases: advances the seed until the
// state/basis pair passes the floor.
struct ConditionedDraw {
  TripartiteState state;
  MeasurementBasis basis;
  std::uint64_t seed;
};

inline ConditionedDraw conditioned_case(int dim_a, int dim_b, int dim_c, std::uint64_t seed) {
  for (;; ++seed) {
    TripartiteState state = haar_random_state(dim_a, dim_b, dim_c, seed);
    MeasurementBasis basis = seeded_basis(dim_c, seed ^ 0x9e3779b97f4a7c15ull);
    if (well_conditioned(state, basis)) return {std::move(state), std::move(basis), seed};
  }
}

}  // namespace entopt::test
