#pragma once

#include <vector>

#include "entopt/linalg.hpp"
#include "entopt/states.hpp"

namespace entopt {

// Orthonormal measurement basis on part C, stored as the columns of a unitary.
class MeasurementBasis {
 public:
  explicit MeasurementBasis(CMatrix columns);

  static MeasurementBasis computational(int dim);
  // Columns are the eigenvectors of rho^C, sorted by descending eigenvalue.
  static MeasurementBasis eigenbasis_of_c(const TripartiteState& state);

  int dim() const { return static_cast<int>(u_.cols()); }
  const CMatrix& columns() const { return u_; }
  CVector vector(int i) const;

 private:
  CMatrix u_;
};

// Qubit basis from polar angles: columns [cos(t/2), e^{i phi} sin(t/2)] and
// [sin(t/2), -e^{i phi} cos(t/2)].
MeasurementBasis bloch_basis(double theta, double phi);

// One outcome of measuring C: the post-measurement bipartite state on A+B.
// Outcomes with probability <= kProbTol are dropped from the decomposition,
// so a Decomposition may hold fewer branches than dimC.
struct Branch {
  double probability = 0.0;
  CVector state;         // normalized, indexed a*dimB + b
  double entropy = 0.0;  // entanglement across A|B in bits
};

struct Decomposition {
  std::vector<Branch> branches;
  double average_entropy = 0.0;
  int dim_a = 0;
  int dim_b = 0;
};

// Rows of U^+ g give the unnormalized branches; row norms squared the probabilities.
Decomposition decompose(const TripartiteState& state, const MeasurementBasis& basis);

double average_entropy(const TripartiteState& state, const MeasurementBasis& basis);

// sum_i p_i |v_i><v_i| over the branches; equals the A+B reduced density of the
// original state for any basis choice.
CMatrix mixture_density(const Decomposition& decomposition);

struct SweepPoint {
  double theta = 0.0;
  double phi = 0.0;
  double avg_entropy = 0.0;
};

// Average entropy over a uniform (theta, phi) grid for a qubit C. Theta covers
// [0, pi] inclusive of both endpoints, phi covers [0, 2*pi) excluding 2*pi.
// Rows are theta-major.
std::vector<SweepPoint> sweep(const TripartiteState& state, int theta_steps, int phi_steps);

}  // namespace entopt
