#include "entopt/measurement.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace entopt {

MeasurementBasis::MeasurementBasis(CMatrix columns) : u_(std::move(columns)) {
  if (u_.rows() != u_.cols() || u_.rows() == 0) {
    throw BasisNotUnitary("basis matrix must be square and nonempty, got " +
                          std::to_string(u_.rows()) + "x" + std::to_string(u_.cols()));
  }
  const double defect = max_abs(u_.adjoint() * u_ - CMatrix::Identity(u_.cols(), u_.cols()));
  if (defect > kUnitaryTol) {
    throw BasisNotUnitary("columns not orthonormal: max|U^+U - I| = " +
                          std::to_string(defect));
  }
}

MeasurementBasis MeasurementBasis::computational(int dim) {
  if (dim < 1) throw DimensionMismatch("computational basis needs dim >= 1");
  return MeasurementBasis(CMatrix::Identity(dim, dim));
}

MeasurementBasis MeasurementBasis::eigenbasis_of_c(const TripartiteState& state) {
  const auto eig = hermitian_eig(reduced_density(state, Part::C).matrix());
  return MeasurementBasis(eig.eigenvectors);
}

CVector MeasurementBasis::vector(int i) const {
  if (i < 0 || i >= dim()) {
    throw IndexOutOfRange("basis vector " + std::to_string(i) + " of " +
                          std::to_string(dim()));
  }
  return u_.col(i);
}

MeasurementBasis bloch_basis(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex ph = std::exp(Complex(0.0, phi));
  CMatrix u(2, 2);
  u << c, s, ph * s, -ph * c;
  return MeasurementBasis(std::move(u));
}

Decomposition decompose(const TripartiteState& state, const MeasurementBasis& basis) {
  if (basis.dim() != state.dim_c()) {
    throw DimensionMismatch("basis dimension " + std::to_string(basis.dim()) +
                            " does not match part C dimension " +
                            std::to_string(state.dim_c()));
  }
  const CMatrix g = coefficient_matrix_cs(state);
  const CMatrix rows = basis.columns().adjoint() * g;

  Decomposition d;
  d.dim_a = state.dim_a();
  d.dim_b = state.dim_b();
  double avg = 0.0;
  for (int i = 0; i < basis.dim(); ++i) {
    const double p = rows.row(i).squaredNorm();
    if (p <= kProbTol) continue;
    Branch br;
    br.probability = p;
    br.state = rows.row(i).transpose() / std::sqrt(p);
    const CMatrix q = branch_matrix(br.state, d.dim_a, d.dim_b);
    br.entropy = vn_entropy_bits(q * q.adjoint());
    avg += p * br.entropy;
    d.branches.push_back(std::move(br));
  }
  d.average_entropy = avg;
  return d;
}

double average_entropy(const TripartiteState& state, const MeasurementBasis& basis) {
  return decompose(state, basis).average_entropy;
}

CMatrix mixture_density(const Decomposition& decomposition) {
  if (decomposition.branches.empty()) {
    throw DomainError("mixture of an empty decomposition");
  }
  const Eigen::Index n = decomposition.branches.front().state.size();
  CMatrix m = CMatrix::Zero(n, n);
  for (const Branch& br : decomposition.branches) {
    m.noalias() += br.probability * (br.state * br.state.adjoint());
  }
  return m;
}

std::vector<SweepPoint> sweep(const TripartiteState& state, int theta_steps, int phi_steps) {
  if (state.dim_c() != 2) {
    throw DimensionMismatch("sweep needs a qubit part C, got dimension " +
                            std::to_string(state.dim_c()));
  }
  if (theta_steps < 1 || phi_steps < 1) {
    throw DomainError("sweep needs at least one step per angle");
  }
  constexpr double pi = std::numbers::pi;
  std::vector<SweepPoint> table;
  table.reserve(static_cast<std::size_t>(theta_steps) * phi_steps);
  for (int t = 0; t < theta_steps; ++t) {
    const double theta = theta_steps == 1 ? 0.0 : pi * t / (theta_steps - 1);
    for (int f = 0; f < phi_steps; ++f) {
      const double phi = 2.0 * pi * f / phi_steps;
      table.push_back({theta, phi, average_entropy(state, bloch_basis(theta, phi))});
    }
  }
  return table;
}

}  // namespace entopt
