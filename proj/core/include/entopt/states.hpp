#pragma once

#include <cstdint>

#include "entopt/linalg.hpp"

namespace entopt {

enum class Part { A, B, C, AB };

// Pure state of a tripartite system A x B x C. Amplitudes are stored a-major,
// then b, then c: index = (a*dimB + b)*dimC + c. Always unit-norm.
class TripartiteState {
 public:
  // Validates dimensions and renormalizes amplitudes whose norm is within
  // 1e-6 of 1. Throws DimensionMismatch on bad sizes, NotNormalizable on a
  // zero vector or a norm further than 1e-6 from 1.
  static TripartiteState make(int dim_a, int dim_b, int dim_c, CVector amplitudes);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim_c() const { return dim_c_; }
  int dim_s() const { return dim_a_ * dim_b_; }  // composite S = A+B
  const CVector& amplitudes() const { return amplitudes_; }

  int index(int a, int b, int c) const { return (a * dim_b_ + b) * dim_c_ + c; }
  Complex amplitude(int a, int b, int c) const { return amplitudes_[index(a, b, c)]; }

 private:
  TripartiteState(int dim_a, int dim_b, int dim_c, CVector amplitudes)
      : dim_a_(dim_a), dim_b_(dim_b), dim_c_(dim_c), amplitudes_(std::move(amplitudes)) {}

  int dim_a_;
  int dim_b_;
  int dim_c_;
  CVector amplitudes_;
};

TripartiteState make_state(int dim_a, int dim_b, int dim_c, CVector amplitudes);

// Hermitian, PSD, unit-trace matrix. Construction checks Hermiticity within
// kHermTol and trace within 1e-8 of 1 (then rescales the trace to machine
// precision); positive semidefiniteness is checked where it is consumed.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const CMatrix& matrix() const { return mat_; }

 private:
  CMatrix mat_;
};

// The coefficient matrix g with rows indexed by the C basis and columns by
// the composite S index j = a*dimB + b.
CMatrix coefficient_matrix_cs(const TripartiteState& state);

// Partial trace of |psi><psi| onto the kept part(s).
DensityMatrix reduced_density(const TripartiteState& state, Part keep);

// RDM of A for a pure state of S given as a length dimA*dimB vector:
// reshape to Q (dimA x dimB, a-major) and return Q Q^+.
// Throws NotNormalized if the branch norm is further than 1e-8 from 1.
DensityMatrix bipartite_branch_rdm(const CVector& branch, int dim_a, int dim_b);

// Reshape a composite-S vector to its dimA x dimB coefficient matrix.
CMatrix branch_matrix(const CVector& branch, int dim_a, int dim_b);

// Haar-uniform random pure state: complex standard-normal amplitudes,
// normalized. Deterministic for a fixed seed.
TripartiteState haar_random_state(int dim_a, int dim_b, int dim_c, std::uint64_t seed);

// Conjugate one local part by a unitary, leaving the others alone.
// Part::AB is not a local part here.
TripartiteState apply_local_unitary(const TripartiteState& state, Part part, const CMatrix& u);

// Named fixtures.
TripartiteState w_state();
TripartiteState ghz_state();
TripartiteState product_state();  // |000> on 2x2x2

}  // namespace entopt
