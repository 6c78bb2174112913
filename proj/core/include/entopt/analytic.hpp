#pragma once

#include "entopt/linalg.hpp"

namespace entopt {

// Polar angles of a qubit measurement direction.
struct BlochPoint {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2*pi); never enters the closed forms below
};

// Closed-form data for measuring the W state's third qubit along a Bloch
// direction: outcome probabilities, branch RDM eigenvalues, branch entropies,
// and their probability-weighted average.
struct WBranchData {
  double p1 = 0.0, p2 = 0.0;
  double lambda_plus_1 = 0.0, lambda_minus_1 = 0.0;
  double lambda_plus_2 = 0.0, lambda_minus_2 = 0.0;
  double s1 = 0.0, s2 = 0.0;  // bits
  double avg = 0.0;           // p1*s1 + p2*s2
};

WBranchData w_branch_data(const BlochPoint& point);

// Average entropy for the W state at angle theta (phi drops out).
double w_avg_entropy(double theta);

// Average entropy for the GHZ state: the binary entropy of cos^2(theta/2).
double ghz_avg_entropy(const BlochPoint& point);

// Extremal average entropies in closed form, evaluated in double precision.
struct ExactConstants {
  double w_ef = 0.0;   // log2(3) - (sqrt(5)/3) * log2((3 + sqrt(5)) / 2)
  double w_ea = 0.0;   // 2/3
  double ghz_ef = 0.0;
  double ghz_ea = 0.0;
};

ExactConstants exact_constants();

}  // namespace entopt
