#pragma once

#include <vector>

#include "entopt/optimizer.hpp"

namespace entopt {

// Canonical purification of a bipartite density matrix: |Psi> = sum over the
// nonzero eigenpairs (descending) of sqrt(lambda_k) |v_k>^S |k>^C, so part C
// has dimension rank(rho). Eigenvalues <= kProbTol are treated as zero;
// eigenvalues below -kHermTol raise NotDensityMatrix.
TripartiteState purify(const DensityMatrix& rho, int dim_a, int dim_b);

// Grow part C by a factor ancilla_dim, placing the ancilla in its first basis
// state: new index c' = c*ancilla_dim, all other slots zero. The reduced A+B
// state is unchanged.
TripartiteState extend_with_ancilla(const TripartiteState& state, int ancilla_dim);

struct BoundRow {
  int ancilla_dim = 1;
  double ef_bound = 0.0;  // best minimum found, bits
  double ea_bound = 0.0;  // best maximum found, bits
  bool converged = true;  // both optimizations converged
};

// Purify rho, then for each ancilla dimension extend and optimize both ways.
// Each row's optimizations are warm-started with the previous row's optimal
// bases (embedded by tensoring with the identity on the new ancilla factor),
// which makes ef_bound nonincreasing and ea_bound nondecreasing along the
// table whenever successive dimensions divide evenly.
std::vector<BoundRow> bound_mixed_state(const DensityMatrix& rho, int dim_a, int dim_b,
                                        const std::vector<int>& ancilla_dims,
                                        const OptimizeConfig& config = {});

// Doubling sequence 1, 2, 4, ... capped at rank(rho), so the largest extended
// measurement dimension is rank squared.
std::vector<int> default_ancilla_dims(const DensityMatrix& rho);

}  // namespace entopt
