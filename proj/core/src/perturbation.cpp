#include "entopt/perturbation.hpp"

#include <cmath>
#include <string>

namespace entopt {

namespace {

void check_direction(const ETDirection& dir, int dim) {
  if (dir.i < 0 || dir.i >= dim || dir.j < 0 || dir.j >= dim) {
    throw IndexOutOfRange("ET direction (" + std::to_string(dir.i) + "," +
                          std::to_string(dir.j) + ") outside basis of dimension " +
                          std::to_string(dim));
  }
  if (dir.i == dir.j) {
    throw IndexOutOfRange("ET direction needs two distinct columns, got " +
                          std::to_string(dir.i) + " twice");
  }
}

}  // namespace

MeasurementBasis apply_et(const MeasurementBasis& basis, const ETDirection& dir,
                          double epsilon) {
  check_direction(dir, basis.dim());
  if (!std::isfinite(epsilon)) {
    throw DomainError("ET angle must be finite");
  }
  const double c = std::cos(epsilon);
  const double s = std::sin(epsilon);
  CMatrix u = basis.columns();
  const CVector col_i = u.col(dir.i);
  const CVector col_j = u.col(dir.j);
  if (dir.kind == ETKind::Real) {
    u.col(dir.i) = c * col_i + s * col_j;
    u.col(dir.j) = -s * col_i + c * col_j;
  } else {
    const Complex is(0.0, s);
    u.col(dir.i) = c * col_i + is * col_j;
    u.col(dir.j) = is * col_i + c * col_j;
  }
  return MeasurementBasis(std::move(u));
}

PerturbationData perturbation_data(const TripartiteState& state, const MeasurementBasis& basis,
                                   const ETDirection& dir) {
  check_direction(dir, basis.dim());
  if (basis.dim() != state.dim_c()) {
    throw DimensionMismatch("basis dimension " + std::to_string(basis.dim()) +
                            " does not match part C dimension " +
                            std::to_string(state.dim_c()));
  }
  const CMatrix g = coefficient_matrix_cs(state);
  const Eigen::RowVectorXcd row_i = basis.columns().col(dir.i).adjoint() * g;
  const Eigen::RowVectorXcd row_j = basis.columns().col(dir.j).adjoint() * g;

  PerturbationData d;
  d.p_i = row_i.squaredNorm();
  d.p_j = row_j.squaredNorm();
  if (d.p_i <= kProbTol || d.p_j <= kProbTol) {
    throw DegenerateBranch("branch probabilities " + std::to_string(d.p_i) + ", " +
                           std::to_string(d.p_j) + " include a vanishing one");
  }

  // <xi_i| rho^C |xi_j> in the measurement basis.
  const Complex rc_ij = (row_i * row_j.adjoint())(0, 0);
  if (dir.kind == ETKind::Real) {
    d.k_ij = 2.0 * rc_ij.real();
  } else {
    d.k_ij = -2.0 * rc_ij.imag();
  }
  d.k_ji = d.k_ij;

  d.a_ij = -0.5 * d.k_ij / d.p_i;
  d.a_ji = -0.5 * d.k_ji / d.p_j;
  d.b_ij = std::sqrt(d.p_j / d.p_i);
  d.b_ji = std::sqrt(d.p_i / d.p_j);

  const CMatrix q = branch_matrix(row_i.transpose() / std::sqrt(d.p_i), state.dim_a(),
                                  state.dim_b());
  const CMatrix r = branch_matrix(row_j.transpose() / std::sqrt(d.p_j), state.dim_a(),
                                  state.dim_b());
  const CMatrix qr = q * r.adjoint();
  if (dir.kind == ETKind::Real) {
    d.delta = 0.5 * (qr + qr.adjoint());
  } else {
    d.delta = Complex(0.0, 0.5) * (qr - qr.adjoint());
  }

  const CMatrix rho_i = q * q.adjoint();
  const CMatrix rho_j = r * r.adjoint();
  d.rho_a1_ij = 2.0 * d.a_ij * rho_i + 2.0 * d.b_ij * d.delta;
  d.rho_a1_ji = 2.0 * d.a_ji * rho_j + 2.0 * d.b_ji * d.delta;

  d.s_i = vn_entropy_bits(rho_i);
  d.s_j = vn_entropy_bits(rho_j);
  d.s1_ij = entropy_first_order(DensityMatrix(rho_i), d.rho_a1_ij);
  d.s1_ji = entropy_first_order(DensityMatrix(rho_j), d.rho_a1_ji);

  d.sbar1 = d.k_ij * d.s_i - d.p_i * d.s1_ij - d.k_ji * d.s_j + d.p_j * d.s1_ji;
  return d;
}

double sbar1(const TripartiteState& state, const MeasurementBasis& basis,
             const ETDirection& dir) {
  check_direction(dir, basis.dim());
  if (basis.dim() != state.dim_c()) {
    throw DimensionMismatch("basis dimension " + std::to_string(basis.dim()) +
                            " does not match part C dimension " +
                            std::to_string(state.dim_c()));
  }
  const CMatrix g = coefficient_matrix_cs(state);
  const double p_i = (basis.columns().col(dir.i).adjoint() * g).squaredNorm();
  const double p_j = (basis.columns().col(dir.j).adjoint() * g).squaredNorm();
  if (p_i <= kProbTol || p_j <= kProbTol) {
    return 0.0;  // a vanishing branch only changes at second order
  }
  return perturbation_data(state, basis, dir).sbar1;
}

double entropy_first_order(const DensityMatrix& rho_a, const CMatrix& rho_a1) {
  if (rho_a1.rows() != rho_a.dim() || rho_a1.cols() != rho_a.dim()) {
    throw DimensionMismatch("first-order term is " + std::to_string(rho_a1.rows()) + "x" +
                            std::to_string(rho_a1.cols()) + ", density matrix has dimension " +
                            std::to_string(rho_a.dim()));
  }
  const double tr = std::abs(rho_a1.trace());
  if (tr > 1e-9) {
    throw NotTraceless("first-order RDM change has trace " + std::to_string(tr));
  }
  const auto eig = hermitian_eig(rho_a.matrix());
  double total = 0.0;
  for (Eigen::Index l = 0; l < eig.eigenvalues.size(); ++l) {
    const double lambda = eig.eigenvalues[l];
    if (lambda <= kProbTol) continue;  // zero eigenvalue forces zero first-order change
    const CVector v = eig.eigenvectors.col(l);
    const double lambda1 = (v.adjoint() * rho_a1 * v)(0, 0).real();
    total += lambda1 * std::log2(lambda);
  }
  return total;
}

}  // namespace entopt
