#pragma once

#include <string>
#include <vector>

#include "entopt/ancilla.hpp"
#include "entopt/measurement.hpp"
#include "entopt/optimality.hpp"
#include "entopt/optimizer.hpp"
#include "entopt/states.hpp"

namespace entopt {

// File formats (all JSON):
//   state:   {"dims":[dimA,dimB,dimC],"amplitudes":[[re,im],...]} in index
//            order (a*dimB + b)*dimC + c
//   density: {"dims":[dimA,dimB],"matrix":[[[re,im],...],...]} row-major;
//            trace within 1e-6 of 1 is renormalized
//   basis:   {"columns":[[[re,im],...],...]} list of orthonormal columns
// Parse problems throw ParseError with the path and the offending field; a
// wrong-length amplitude list names the expected length.

TripartiteState load_state_json(const std::string& path);
void save_state_json(const TripartiteState& state, const std::string& path);

DensityMatrix load_density_json(const std::string& path, int* dim_a = nullptr,
                                int* dim_b = nullptr);
void save_density_json(const DensityMatrix& rho, int dim_a, int dim_b,
                       const std::string& path);

MeasurementBasis load_basis_json(const std::string& path);
void save_basis_json(const MeasurementBasis& basis, const std::string& path);

// Report rendering. All reals are rounded to 12 significant digits so equal
// configurations produce byte-identical files.
std::string decomposition_json(const Decomposition& decomposition);
std::string report_json(const OptimalityReport& report);
std::string optimize_json(const OptimizeResult& result);
std::string bounds_json(const std::vector<BoundRow>& rows);
std::string constants_json();
std::string sweep_csv(const std::vector<SweepPoint>& table);

// "%.12g" rendering and the double nearest to it.
std::string format_12(double x);
double round_12(double x);

// Writes via a temporary file in the same directory plus an atomic rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace entopt
