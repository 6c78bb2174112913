#include "entopt/ancilla.hpp"

#include <cmath>
#include <string>

namespace entopt {

namespace {

CMatrix kron_with_identity(const CMatrix& u, int q) {
  const Eigen::Index n = u.rows();
  CMatrix out = CMatrix::Zero(n * q, n * q);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (int t = 0; t < q; ++t) {
        out(r * q + t, c * q + t) = u(r, c);
      }
    }
  }
  return out;
}

}  // namespace

TripartiteState purify(const DensityMatrix& rho, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1) {
    throw DimensionMismatch("purify: dimensions must be >= 1");
  }
  if (rho.dim() != dim_a * dim_b) {
    throw DimensionMismatch("purify: density matrix has dimension " +
                            std::to_string(rho.dim()) + ", expected " +
                            std::to_string(dim_a * dim_b));
  }
  const auto eig = hermitian_eig(rho.matrix());
  int rank = 0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda < -kHermTol) {
      throw NotDensityMatrix("purify: negative eigenvalue " + std::to_string(lambda));
    }
    if (lambda > kProbTol) ++rank;  // descending order: nonzero ones come first
  }
  if (rank == 0) {
    throw NotDensityMatrix("purify: all eigenvalues vanish");
  }
  const int dim_c = rank;
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim_a) * dim_b * dim_c);
  for (int c = 0; c < dim_c; ++c) {
    const double root = std::sqrt(eig.eigenvalues[c]);
    for (int j = 0; j < dim_a * dim_b; ++j) {
      amps[static_cast<Eigen::Index>(j) * dim_c + c] = root * eig.eigenvectors(j, c);
    }
  }
  return make_state(dim_a, dim_b, dim_c, std::move(amps));
}

TripartiteState extend_with_ancilla(const TripartiteState& state, int ancilla_dim) {
  if (ancilla_dim < 1) {
    throw DimensionMismatch("ancilla dimension must be >= 1");
  }
  if (ancilla_dim == 1) return state;
  const int dim_c = state.dim_c() * ancilla_dim;
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(state.dim_s()) * dim_c);
  for (int j = 0; j < state.dim_s(); ++j) {
    for (int c = 0; c < state.dim_c(); ++c) {
      amps[static_cast<Eigen::Index>(j) * dim_c + c * ancilla_dim] =
          state.amplitudes()[static_cast<Eigen::Index>(j) * state.dim_c() + c];
    }
  }
  return make_state(state.dim_a(), state.dim_b(), dim_c, std::move(amps));
}

std::vector<BoundRow> bound_mixed_state(const DensityMatrix& rho, int dim_a, int dim_b,
                                        const std::vector<int>& ancilla_dims,
                                        const OptimizeConfig& config) {
  if (ancilla_dims.empty()) {
    throw DomainError("bound_mixed_state needs at least one ancilla dimension");
  }
  const TripartiteState purified = purify(rho, dim_a, dim_b);

  struct Carry {
    int dim = 0;
    CMatrix min_basis;
    CMatrix max_basis;
  };
  Carry prev;

  std::vector<BoundRow> table;
  table.reserve(ancilla_dims.size());
  for (const int dim : ancilla_dims) {
    const TripartiteState extended = extend_with_ancilla(purified, dim);
    OptimizeConfig local = config;
    local.warm_starts.clear();

    const auto run = [&](Target target, const CMatrix& carry_basis) {
      OptimizeConfig c = local;
      if (prev.dim > 0 && dim % prev.dim == 0 && dim != prev.dim) {
        c.warm_starts.push_back(kron_with_identity(carry_basis, dim / prev.dim));
      } else if (prev.dim == dim) {
        c.warm_starts.push_back(carry_basis);
      }
      return optimize(extended, target, c);
    };
    OptimizeResult lo = run(Target::Min, prev.min_basis);
    OptimizeResult hi = run(Target::Max, prev.max_basis);

    table.push_back({dim, lo.value, hi.value, lo.converged && hi.converged});
    prev = {dim, lo.basis.columns(), hi.basis.columns()};
  }
  return table;
}

std::vector<int> default_ancilla_dims(const DensityMatrix& rho) {
  const auto eig = hermitian_eig(rho.matrix());
  int rank = 0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    if (eig.eigenvalues[k] > kProbTol) ++rank;
  }
  std::vector<int> dims;
  for (int d = 1; d < rank; d *= 2) {
    dims.push_back(d);
  }
  if (rank >= 1) dims.push_back(rank);
  return dims;
}

}  // namespace entopt
