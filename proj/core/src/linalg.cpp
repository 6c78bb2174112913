#include "entopt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace entopt {

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

HermitianEig hermitian_eig(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw NotHermitian("hermitian_eig: matrix is " + std::to_string(m.rows()) +
                       "x" + std::to_string(m.cols()) + ", expected square");
  }
  const double asym = max_abs(m - m.adjoint());
  if (asym > kHermTol) {
    throw NotHermitian("hermitian_eig: max|m - m^+| = " + std::to_string(asym));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("hermitian_eig: eigensolver did not converge");
  }

  // Eigen sorts ascending; flip to descending.
  const auto n = m.rows();
  HermitianEig out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    out.eigenvectors.col(c) = solver.eigenvectors().col(n - 1 - c);
  }
  return out;
}

Svd svd(const CMatrix& m) {
  if (m.size() == 0) {
    throw DimensionMismatch("svd: empty matrix");
  }
  Eigen::JacobiSVD<CMatrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.singularValues().hasNaN()) {
    throw NoConvergence("svd: solver produced NaN singular values");
  }
  return Svd{solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

double xlog2x_spectrum(std::span<const double> eigs) {
  std::vector<double> sorted(eigs.begin(), eigs.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double acc = 0.0;
  for (double lam : sorted) {
    if (lam < -kHermTol) {
      throw DomainError("xlog2x_spectrum: eigenvalue " + std::to_string(lam) +
                        " below -" + std::to_string(kHermTol));
    }
    if (lam <= 0.0) continue;  // clamp [-kHermTol, 0] to 0; 0*log2(0) = 0
    acc -= lam * std::log2(lam);
  }
  return acc;
}

double xlog2x_spectrum(const RVector& eigs) {
  return xlog2x_spectrum(std::span<const double>(eigs.data(), static_cast<size_t>(eigs.size())));
}

double vn_entropy_bits(const CMatrix& rho) {
  return xlog2x_spectrum(hermitian_eig(rho).eigenvalues);
}

CMatrix haar_random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix z(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      z(r, c) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is exactly Haar.
  for (int c = 0; c < dim; ++c) {
    const Complex d = r(c, c);
    const double mag = std::abs(d);
    q.col(c) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace entopt
