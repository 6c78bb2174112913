#include "entopt/analytic.hpp"

#include <array>
#include <cmath>

namespace entopt {

namespace {

struct HalfBranch {
  double p;
  double lambda_plus;
  double lambda_minus;
  double entropy;
};

// One W-state branch in terms of c2 = cos^2(t/2) of its own angle:
// p = (1 + c2)/3 and the branch RDM eigenvalues
// (1 +- sqrt(1 - c2) * sqrt(1 + 3*c2) / (1 + c2)) / 2. The other branch is
// this one at the mirrored angle.
HalfBranch w_half_branch(double c2) {
  const double p = (1.0 + c2) / 3.0;
  const double root = std::sqrt(1.0 - c2) * std::sqrt(1.0 + 3.0 * c2) / (1.0 + c2);
  const double plus = 0.5 * (1.0 + root);
  const double minus = 0.5 * (1.0 - root);
  const std::array<double, 2> spectrum{plus, minus};
  return {p, plus, minus, xlog2x_spectrum(spectrum)};
}

}  // namespace

WBranchData w_branch_data(const BlochPoint& point) {
  const double c = std::cos(point.theta / 2.0);
  const double s = std::sin(point.theta / 2.0);
  const HalfBranch one = w_half_branch(c * c);
  const HalfBranch two = w_half_branch(s * s);
  WBranchData d;
  d.p1 = one.p;
  d.p2 = two.p;
  d.lambda_plus_1 = one.lambda_plus;
  d.lambda_minus_1 = one.lambda_minus;
  d.lambda_plus_2 = two.lambda_plus;
  d.lambda_minus_2 = two.lambda_minus;
  d.s1 = one.entropy;
  d.s2 = two.entropy;
  d.avg = one.p * one.entropy + two.p * two.entropy;
  return d;
}

double w_avg_entropy(double theta) { return w_branch_data({theta, 0.0}).avg; }

double ghz_avg_entropy(const BlochPoint& point) {
  const double c = std::cos(point.theta / 2.0);
  const double s = std::sin(point.theta / 2.0);
  const std::array<double, 2> spectrum{c * c, s * s};
  return xlog2x_spectrum(spectrum);
}

ExactConstants exact_constants() {
  const double r5 = std::sqrt(5.0);
  ExactConstants k;
  k.w_ef = std::log2(3.0) - (r5 / 3.0) * std::log2((3.0 + r5) / 2.0);
  k.w_ea = 2.0 / 3.0;
  k.ghz_ef = 0.0;
  k.ghz_ea = 1.0;
  return k;
}

}  // namespace entopt
