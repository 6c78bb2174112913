#pragma once

#include "entopt/measurement.hpp"

namespace entopt {

// The two elementary-transformation kinds that move the average entropy.
// Real mixes columns i, j by a plane rotation; Phase mixes them with +-i
// phases. Together they span every basis direction the average entropy can
// vary along (per-column phases never change it).
enum class ETKind { Real, Phase };

struct ETDirection {
  int i = 0;
  int j = 1;
  ETKind kind = ETKind::Real;
};

// Exact rotation of basis columns i and j:
//   Real:  col_i' =  cos(e) col_i + sin(e) col_j,  col_j' = -sin(e) col_i + cos(e) col_j
//   Phase: col_i' =  cos(e) col_i + i sin(e) col_j, col_j' = i sin(e) col_i + cos(e) col_j
// Both agree with the first-order forms col_i + e*col_j (resp. +ie*col_j) to
// O(e^2), stay exactly unitary for any e, and compose additively in e.
MeasurementBasis apply_et(const MeasurementBasis& basis, const ETDirection& dir, double epsilon);

// First-order responses to an ET at epsilon = 0. Probabilities move as
// p_i' = p_i + e*k_ij, p_j' = p_j - e*k_ji; branch RDMs as
// rho^A(xi_i)' = rho^A(xi_i) + e*rho_a1_ij and rho^A(xi_j)' - e*rho_a1_ji;
// entropies as S_i' = S_i - e*s1_ij, S_j' = S_j + e*s1_ji. The total
// first-order change of the average entropy is sbar1.
struct PerturbationData {
  double p_i = 0.0, p_j = 0.0;
  double s_i = 0.0, s_j = 0.0;       // branch entropies, bits
  double k_ij = 0.0, k_ji = 0.0;     // equal for both kinds
  double a_ij = 0.0, a_ji = 0.0;     // -k/(2p)
  double b_ij = 0.0, b_ji = 0.0;     // sqrt(p_other/p_self)
  CMatrix delta;                     // Hermitian mixing term, same matrix for both sides
  CMatrix rho_a1_ij, rho_a1_ji;      // traceless Hermitian
  double s1_ij = 0.0, s1_ji = 0.0;
  double sbar1 = 0.0;                // k_ij*s_i - p_i*s1_ij - k_ji*s_j + p_j*s1_ji
};

// Throws DegenerateBranch when either probability is <= kProbTol; route those
// cases through sbar1, which handles them exactly.
PerturbationData perturbation_data(const TripartiteState& state, const MeasurementBasis& basis,
                                   const ETDirection& dir);

// d(average entropy)/d(epsilon) at epsilon = 0 for the given ET. Returns
// exactly 0 when either branch probability is <= kProbTol: a vanishing branch
// changes only at second order.
double sbar1(const TripartiteState& state, const MeasurementBasis& basis, const ETDirection& dir);

// Tr[rho_a1 * log2(rho_a)] evaluated spectrally: sum over eigenpairs of rho_a
// of <v|rho_a1|v> * log2(lambda), dropping terms with lambda <= kProbTol
// (a vanishing eigenvalue forces its first-order change to vanish too).
// Throws NotTraceless if |Tr rho_a1| > 1e-9.
double entropy_first_order(const DensityMatrix& rho_a, const CMatrix& rho_a1);

}  // namespace entopt
