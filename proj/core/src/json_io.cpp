#include "entopt/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "entopt/analytic.hpp"

namespace entopt {

namespace {

using json = nlohmann::ordered_json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot read " + path);
  }
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(path + ": missing \"" + key + "\"");
  }
  return *it;
}

Complex read_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(path + ": complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_out(Complex z, bool rounded) {
  if (rounded) return json::array({round_12(z.real()), round_12(z.imag())});
  return json::array({z.real(), z.imag()});
}

json vector_out(const CVector& v, bool rounded) {
  json arr = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    arr.push_back(complex_out(v[k], rounded));
  }
  return arr;
}

json columns_out(const CMatrix& m, bool rounded) {
  json cols = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    cols.push_back(vector_out(m.col(c), rounded));
  }
  return cols;
}

const char* kind_name(ETKind kind) { return kind == ETKind::Real ? "real" : "phase"; }

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::Minimum: return "minimum";
    case Classification::Maximum: return "maximum";
    case Classification::Saddle: return "saddle";
    case Classification::BoundaryFlat: return "boundary-flat";
  }
  return "unknown";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

TripartiteState load_state_json(const std::string& path) {
  const json j = parse_file(path);
  const json& dims = field(j, "dims", path);
  if (!dims.is_array() || dims.size() != 3) {
    throw ParseError(path + ": \"dims\" must be [dimA, dimB, dimC]");
  }
  const int da = dims[0].get<int>();
  const int db = dims[1].get<int>();
  const int dc = dims[2].get<int>();
  if (da < 1 || db < 1 || dc < 1) {
    throw ParseError(path + ": dimensions must be >= 1");
  }
  const json& amps = field(j, "amplitudes", path);
  const auto expected = static_cast<std::size_t>(da) * db * dc;
  if (!amps.is_array() || amps.size() != expected) {
    throw ParseError(path + ": expected " + std::to_string(expected) + " amplitudes, got " +
                     std::to_string(amps.is_array() ? amps.size() : 0));
  }
  CVector v(static_cast<Eigen::Index>(expected));
  for (std::size_t k = 0; k < expected; ++k) {
    v[static_cast<Eigen::Index>(k)] = read_complex(amps[k], path);
  }
  try {
    return make_state(da, db, dc, std::move(v));
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_state_json(const TripartiteState& state, const std::string& path) {
  json j;
  j["dims"] = {state.dim_a(), state.dim_b(), state.dim_c()};
  j["amplitudes"] = vector_out(state.amplitudes(), false);
  write_file_atomic(path, dump(j));
}

DensityMatrix load_density_json(const std::string& path, int* dim_a, int* dim_b) {
  const json j = parse_file(path);
  const json& dims = field(j, "dims", path);
  if (!dims.is_array() || dims.size() != 2) {
    throw ParseError(path + ": \"dims\" must be [dimA, dimB]");
  }
  const int da = dims[0].get<int>();
  const int db = dims[1].get<int>();
  if (da < 1 || db < 1) {
    throw ParseError(path + ": dimensions must be >= 1");
  }
  const int n = da * db;
  const json& rows = field(j, "matrix", path);
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
    throw ParseError(path + ": expected " + std::to_string(n) + " matrix rows, got " +
                     std::to_string(rows.is_array() ? rows.size() : 0));
  }
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw ParseError(path + ": expected " + std::to_string(n) + " entries in matrix row " +
                       std::to_string(r));
    }
    for (int c = 0; c < n; ++c) {
      m(r, c) = read_complex(row[c], path);
    }
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > 1e-6 || tr <= 0.0) {
    throw ParseError(path + ": matrix trace " + std::to_string(tr) +
                     " further than 1e-6 from 1");
  }
  m /= tr;
  if (dim_a != nullptr) *dim_a = da;
  if (dim_b != nullptr) *dim_b = db;
  try {
    return DensityMatrix(std::move(m));
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_density_json(const DensityMatrix& rho, int dim_a, int dim_b,
                       const std::string& path) {
  if (rho.dim() != dim_a * dim_b) {
    throw DimensionMismatch("density matrix has dimension " + std::to_string(rho.dim()) +
                            ", expected " + std::to_string(dim_a * dim_b));
  }
  json j;
  j["dims"] = {dim_a, dim_b};
  json rows = json::array();
  for (int r = 0; r < rho.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < rho.dim(); ++c) {
      row.push_back(complex_out(rho.matrix()(r, c), false));
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  write_file_atomic(path, dump(j));
}

MeasurementBasis load_basis_json(const std::string& path) {
  const json j = parse_file(path);
  const json& cols = field(j, "columns", path);
  if (!cols.is_array() || cols.empty()) {
    throw ParseError(path + ": \"columns\" must be a nonempty list of vectors");
  }
  const auto n = cols.size();
  CMatrix u(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const json& col = cols[c];
    if (!col.is_array() || col.size() != n) {
      throw ParseError(path + ": expected " + std::to_string(n) + " entries in column " +
                       std::to_string(c));
    }
    for (std::size_t r = 0; r < n; ++r) {
      u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          read_complex(col[r], path);
    }
  }
  try {
    return MeasurementBasis(std::move(u));
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_basis_json(const MeasurementBasis& basis, const std::string& path) {
  json j;
  j["columns"] = columns_out(basis.columns(), false);
  write_file_atomic(path, dump(j));
}

std::string decomposition_json(const Decomposition& decomposition) {
  json j;
  j["average_entropy_bits"] = round_12(decomposition.average_entropy);
  json branches = json::array();
  for (const Branch& br : decomposition.branches) {
    json b;
    b["probability"] = round_12(br.probability);
    b["entropy_bits"] = round_12(br.entropy);
    b["state"] = vector_out(br.state, true);
    branches.push_back(std::move(b));
  }
  j["branches"] = std::move(branches);
  return dump(j);
}

std::string report_json(const OptimalityReport& report) {
  json j;
  j["stationary"] = report.stationary;
  j["worst_residual"] = round_12(report.worst_residual);
  j["tolerance"] = round_12(report.tolerance);
  if (report.worst_i >= 0) {
    j["worst_pair"] = {{"i", report.worst_i},
                       {"j", report.worst_j},
                       {"kind", kind_name(report.worst_kind)}};
  } else {
    j["worst_pair"] = nullptr;
  }
  json pairs = json::array();
  for (const PairResidual& pr : report.per_pair) {
    pairs.push_back({{"i", pr.i},
                     {"j", pr.j},
                     {"kind", kind_name(pr.kind)},
                     {"sbar1", round_12(pr.sbar1)}});
  }
  j["pairs"] = std::move(pairs);
  return dump(j);
}

std::string optimize_json(const OptimizeResult& result) {
  json j;
  j["target"] = result.target == Target::Min ? "min" : "max";
  j["value_bits"] = round_12(result.value);
  j["converged"] = result.converged;
  j["iterations"] = result.iterations;
  j["residual"] = round_12(result.residual);
  if (result.classification.has_value()) {
    j["classification"] = classification_name(*result.classification);
  } else {
    j["classification"] = nullptr;
  }
  j["starts"] = result.starts;
  json values = json::array();
  for (const double v : result.per_start_values) {
    values.push_back(round_12(v));
  }
  j["per_start_values"] = std::move(values);
  j["basis_columns"] = columns_out(result.basis.columns(), true);
  return dump(j);
}

std::string bounds_json(const std::vector<BoundRow>& rows) {
  json arr = json::array();
  for (const BoundRow& row : rows) {
    arr.push_back({{"ancilla_dim", row.ancilla_dim},
                   {"ef_bound_bits", round_12(row.ef_bound)},
                   {"ea_bound_bits", round_12(row.ea_bound)},
                   {"converged", row.converged}});
  }
  return dump(arr);
}

std::string constants_json() {
  const ExactConstants k = exact_constants();
  json j;
  j["W_EF"] = round_12(k.w_ef);
  j["W_EA"] = round_12(k.w_ea);
  j["GHZ_EF"] = round_12(k.ghz_ef);
  j["GHZ_EA"] = round_12(k.ghz_ea);
  return dump(j);
}

std::string sweep_csv(const std::vector<SweepPoint>& table) {
  std::ostringstream out;
  out << "theta,phi,avg_entropy_bits\n";
  for (const SweepPoint& p : table) {
    out << format_12(p.theta) << ',' << format_12(p.phi) << ','
        << format_12(p.avg_entropy) << '\n';
  }
  return out.str();
}

std::string format_12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_12(double x) { return std::strtod(format_12(x).c_str(), nullptr); }

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw Error("cannot write " + tmp.string());
    }
    out << content;
    if (!out.flush()) {
      throw Error("cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    throw Error("cannot move " + tmp.string() + " to " + path + ": " + ec.message());
  }
}

}  // namespace entopt
