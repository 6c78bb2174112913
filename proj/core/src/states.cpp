#include "entopt/states.hpp"

#include <cmath>
#include <string>

namespace entopt {

namespace {
constexpr double kNormInputTol = 1e-6;
constexpr double kTraceInputTol = 1e-8;
}  // namespace

TripartiteState TripartiteState::make(int dim_a, int dim_b, int dim_c, CVector amplitudes) {
  if (dim_a < 1 || dim_b < 1 || dim_c < 1) {
    throw DimensionMismatch("make_state: dimensions must be >= 1, got (" +
                            std::to_string(dim_a) + "," + std::to_string(dim_b) + "," +
                            std::to_string(dim_c) + ")");
  }
  const auto expected = static_cast<Eigen::Index>(dim_a) * dim_b * dim_c;
  if (amplitudes.size() != expected) {
    throw DimensionMismatch("make_state: expected " + std::to_string(expected) +
                            " amplitudes, got " + std::to_string(amplitudes.size()));
  }
  const double norm = amplitudes.norm();
  if (norm == 0.0) {
    throw NotNormalizable("make_state: zero amplitude vector");
  }
  if (std::abs(norm - 1.0) > kNormInputTol) {
    throw NotNormalizable("make_state: norm " + std::to_string(norm) +
                          " further than 1e-6 from 1");
  }
  amplitudes /= norm;
  return TripartiteState(dim_a, dim_b, dim_c, std::move(amplitudes));
}

TripartiteState make_state(int dim_a, int dim_b, int dim_c, CVector amplitudes) {
  return TripartiteState::make(dim_a, dim_b, dim_c, std::move(amplitudes));
}

DensityMatrix::DensityMatrix(CMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0) {
    throw NotDensityMatrix("density matrix must be square and nonempty");
  }
  const double asym = max_abs(mat_ - mat_.adjoint());
  if (asym > kHermTol) {
    throw NotDensityMatrix("density matrix not Hermitian: max|m - m^+| = " +
                           std::to_string(asym));
  }
  const double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > kTraceInputTol) {
    throw NotDensityMatrix("density matrix trace " + std::to_string(tr) +
                           " further than 1e-8 from 1");
  }
  mat_ /= tr;
}

CMatrix coefficient_matrix_cs(const TripartiteState& state) {
  const int dc = state.dim_c();
  const int ds = state.dim_s();
  CMatrix g(dc, ds);
  for (int c = 0; c < dc; ++c) {
    for (int j = 0; j < ds; ++j) {
      g(c, j) = state.amplitudes()[static_cast<Eigen::Index>(j) * dc + c];
    }
  }
  return g;
}

namespace {

// rho^S = g^T g*: the partial trace of |psi><psi| over C, entrywise
// rho_{j,j'} = sum_i g_{i,j} g*_{i,j'}.
CMatrix rho_s_from_g(const CMatrix& g) { return g.transpose() * g.conjugate(); }

CMatrix rho_c_from_g(const CMatrix& g) { return g * g.adjoint(); }

}  // namespace

DensityMatrix reduced_density(const TripartiteState& state, Part keep) {
  const CMatrix g = coefficient_matrix_cs(state);
  switch (keep) {
    case Part::C:
      return DensityMatrix(rho_c_from_g(g));
    case Part::AB:
      return DensityMatrix(rho_s_from_g(g));
    case Part::A: {
      // Trace out C then B: rho^S reshaped over (a,b) indices.
      const CMatrix rho_s = rho_s_from_g(g);
      const int da = state.dim_a();
      const int db = state.dim_b();
      CMatrix rho_a = CMatrix::Zero(da, da);
      for (int a = 0; a < da; ++a) {
        for (int a2 = 0; a2 < da; ++a2) {
          Complex acc = 0.0;
          for (int b = 0; b < db; ++b) {
            acc += rho_s(a * db + b, a2 * db + b);
          }
          rho_a(a, a2) = acc;
        }
      }
      return DensityMatrix(std::move(rho_a));
    }
    case Part::B: {
      const CMatrix rho_s = rho_s_from_g(g);
      const int da = state.dim_a();
      const int db = state.dim_b();
      CMatrix rho_b = CMatrix::Zero(db, db);
      for (int b = 0; b < db; ++b) {
        for (int b2 = 0; b2 < db; ++b2) {
          Complex acc = 0.0;
          for (int a = 0; a < da; ++a) {
            acc += rho_s(a * db + b, a * db + b2);
          }
          rho_b(b, b2) = acc;
        }
      }
      return DensityMatrix(std::move(rho_b));
    }
  }
  throw DomainError("reduced_density: unknown part");
}

CMatrix branch_matrix(const CVector& branch, int dim_a, int dim_b) {
  if (branch.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw DimensionMismatch("branch_matrix: expected length " +
                            std::to_string(dim_a * dim_b) + ", got " +
                            std::to_string(branch.size()));
  }
  CMatrix q(dim_a, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) {
      q(a, b) = branch[a * dim_b + b];
    }
  }
  return q;
}

DensityMatrix bipartite_branch_rdm(const CVector& branch, int dim_a, int dim_b) {
  const double norm = branch.norm();
  if (std::abs(norm - 1.0) > 1e-8) {
    throw NotNormalized("bipartite_branch_rdm: branch norm " + std::to_string(norm));
  }
  const CMatrix q = branch_matrix(branch, dim_a, dim_b);
  return DensityMatrix(q * q.adjoint());
}

TripartiteState haar_random_state(int dim_a, int dim_b, int dim_c, std::uint64_t seed) {
  if (dim_a < 1 || dim_b < 1 || dim_c < 1) {
    throw DimensionMismatch("haar_random_state: dimensions must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector amps(static_cast<Eigen::Index>(dim_a) * dim_b * dim_c);
  for (Eigen::Index k = 0; k < amps.size(); ++k) {
    amps[k] = Complex(gauss(rng), gauss(rng));
  }
  amps /= amps.norm();
  return TripartiteState::make(dim_a, dim_b, dim_c, std::move(amps));
}

TripartiteState apply_local_unitary(const TripartiteState& state, Part part, const CMatrix& u) {
  const int da = state.dim_a();
  const int db = state.dim_b();
  const int dc = state.dim_c();
  const int local = part == Part::A ? da : part == Part::B ? db : dc;
  if (part == Part::AB) {
    throw DomainError("apply_local_unitary: AB is not a local part");
  }
  if (u.rows() != local || u.cols() != local) {
    throw DimensionMismatch("apply_local_unitary: unitary is " + std::to_string(u.rows()) +
                            "x" + std::to_string(u.cols()) + ", part dimension is " +
                            std::to_string(local));
  }
  CVector out = CVector::Zero(state.amplitudes().size());
  for (int a = 0; a < da; ++a) {
    for (int b = 0; b < db; ++b) {
      for (int c = 0; c < dc; ++c) {
        Complex acc = 0.0;
        switch (part) {
          case Part::A:
            for (int k = 0; k < da; ++k) acc += u(a, k) * state.amplitude(k, b, c);
            break;
          case Part::B:
            for (int k = 0; k < db; ++k) acc += u(b, k) * state.amplitude(a, k, c);
            break;
          default:
            for (int k = 0; k < dc; ++k) acc += u(c, k) * state.amplitude(a, b, k);
            break;
        }
        out[state.index(a, b, c)] = acc;
      }
    }
  }
  return TripartiteState::make(da, db, dc, std::move(out));
}

TripartiteState w_state() {
  CVector amps = CVector::Zero(8);
  const double v = 1.0 / std::sqrt(3.0);
  amps[4] = v;  // |100>
  amps[2] = v;  // |010>
  amps[1] = v;  // |001>
  return TripartiteState::make(2, 2, 2, std::move(amps));
}

TripartiteState ghz_state() {
  CVector amps = CVector::Zero(8);
  const double v = 1.0 / std::sqrt(2.0);
  amps[0] = v;  // |000>
  amps[7] = v;  // |111>
  return TripartiteState::make(2, 2, 2, std::move(amps));
}

TripartiteState product_state() {
  CVector amps = CVector::Zero(8);
  amps[0] = 1.0;
  return TripartiteState::make(2, 2, 2, std::move(amps));
}

}  // namespace entopt
