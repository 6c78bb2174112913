#include "entopt/optimality.hpp"

#include <cmath>

namespace entopt {

namespace {

void note_residual(OptimalityReport& report, int i, int j, ETKind kind, double value) {
  report.per_pair.push_back({i, j, kind, value});
  if (std::abs(value) > report.worst_residual) {
    report.worst_residual = std::abs(value);
    report.worst_i = i;
    report.worst_j = j;
    report.worst_kind = kind;
  }
}

// Tr[delta * log2(rho)] over the nonzero part of rho's spectrum.
double trace_against_log(const CMatrix& delta, const CMatrix& rho) {
  const auto eig = hermitian_eig(rho);
  double total = 0.0;
  for (Eigen::Index l = 0; l < eig.eigenvalues.size(); ++l) {
    const double lambda = eig.eigenvalues[l];
    if (lambda <= kProbTol) continue;
    const CVector v = eig.eigenvectors.col(l);
    total += (v.adjoint() * delta * v)(0, 0).real() * std::log2(lambda);
  }
  return total;
}

}  // namespace

OptimalityReport check_optimality(const TripartiteState& state, const MeasurementBasis& basis,
                                  double tolerance) {
  if (tolerance <= 0.0) {
    throw DomainError("stationarity tolerance must be positive");
  }
  const CMatrix g = coefficient_matrix_cs(state);
  const CMatrix rows = basis.columns().adjoint() * g;

  OptimalityReport report;
  report.tolerance = tolerance;
  for (int i = 0; i < basis.dim(); ++i) {
    const double p_i = rows.row(i).squaredNorm();
    if (p_i <= kProbTol) continue;
    for (int j = i + 1; j < basis.dim(); ++j) {
      const double p_j = rows.row(j).squaredNorm();
      if (p_j <= kProbTol) continue;
      for (const ETKind kind : {ETKind::Real, ETKind::Phase}) {
        const double value = perturbation_data(state, basis, {i, j, kind}).sbar1;
        note_residual(report, i, j, kind, value);
      }
    }
  }
  report.stationary = report.worst_residual <= tolerance;
  return report;
}

OptimalityReport check_eigenbasis_condition(const TripartiteState& state, double tolerance) {
  if (tolerance <= 0.0) {
    throw DomainError("stationarity tolerance must be positive");
  }
  const auto eig = hermitian_eig(reduced_density(state, Part::C).matrix());
  const CMatrix g = coefficient_matrix_cs(state);
  const CMatrix rows = eig.eigenvectors.adjoint() * g;

  OptimalityReport report;
  report.tolerance = tolerance;
  for (int i = 0; i < state.dim_c(); ++i) {
    const double p_i = rows.row(i).squaredNorm();
    if (p_i <= kProbTol) continue;
    const CMatrix q = branch_matrix(rows.row(i).transpose() / std::sqrt(p_i), state.dim_a(),
                                    state.dim_b());
    for (int j = i + 1; j < state.dim_c(); ++j) {
      const double p_j = rows.row(j).squaredNorm();
      if (p_j <= kProbTol) continue;
      const CMatrix r = branch_matrix(rows.row(j).transpose() / std::sqrt(p_j), state.dim_a(),
                                      state.dim_b());
      const CMatrix qr = q * r.adjoint();
      const CMatrix delta = 0.5 * (qr + qr.adjoint());
      const double lhs = trace_against_log(delta, q * q.adjoint());
      const double rhs = trace_against_log(delta, r * r.adjoint());
      note_residual(report, i, j, ETKind::Real, 2.0 * std::sqrt(p_i * p_j) * (rhs - lhs));
    }
  }
  report.stationary = report.worst_residual <= tolerance;
  return report;
}

}  // namespace entopt
