#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "entopt/errors.hpp"

namespace entopt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Shared tolerance constants. Every module references these instead of
// redefining its own.
inline constexpr double kHermTol = 1e-10;     // Hermiticity slack
inline constexpr double kUnitaryTol = 1e-9;   // basis orthonormality slack
inline constexpr double kProbTol = 1e-12;     // probabilities below this count as zero
inline constexpr double kEntropyTol = 1e-9;   // entropy comparisons

// Largest entrywise absolute value; zero for empty matrices.
double max_abs(const CMatrix& m);

// Eigensystem of a Hermitian matrix, eigenvalues sorted descending and the
// eigenvector columns ordered to match.
struct HermitianEig {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

// Throws NotHermitian if max|m - m^+| exceeds kHermTol, NoConvergence if the
// underlying iteration fails.
HermitianEig hermitian_eig(const CMatrix& m);

struct Svd {
  CMatrix u;
  RVector singular_values;  // descending, nonnegative
  CMatrix v;                // m = u * diag(s) * v^+
};

Svd svd(const CMatrix& m);

// -sum(lambda * log2(lambda)) with the 0*log2(0) = 0 convention. Values in
// [-kHermTol, 0] are clamped to zero; anything below -kHermTol throws
// DomainError. Terms are summed in sorted order so permutations of the input
// give bit-identical results.
double xlog2x_spectrum(std::span<const double> eigs);
double xlog2x_spectrum(const RVector& eigs);

// von Neumann entropy in bits of a Hermitian PSD matrix.
double vn_entropy_bits(const CMatrix& rho);

// Haar-distributed random unitary (QR of a complex Ginibre matrix with the
// R-diagonal phase fix).
CMatrix haar_random_unitary(int dim, std::mt19937_64& rng);

}  // namespace entopt
