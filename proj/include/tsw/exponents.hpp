#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace tsw {

// Problem triple (n, gamma, p) together with every exponent the estimates
// derive from it. r and q are populated only for n > 3 with p inside the
// derived-exponent window; otherwise they are NaN.
struct ProblemParams {
  int n = 4;
  double gamma = 0.0;
  double p = 2.0;

  double gamma0 = 0.0;    // (n-3) / (2(n-1))
  double r0 = 0.0;        // 2(n-1) / (n-3)
  double r0_prime = 0.0;  // 2(n-1) / (n+1)
  double p0 = 0.0;        // (n+1)^2 / ((n-1)^2 + 4)
  double r = 0.0;         // p r0'
  double q = 0.0;         // from the sharp wave-admissibility relation
  double inv_q = 0.0;
};

ProblemParams make_params(int n, double gamma, double p);

// 1/q + ((n-1)/2)/r == (n-1)/4 within 1e-12, with 2 <= q, r <= infinity.
bool is_sharp_admissible(double q, double r, int n);

// The convex piecewise-linear exponent of the two-scale Strichartz gain:
// (2n k - (n+1) j)/(n-1) for j <= k, 2k - j for k <= j <= 2k, else 0.
double alpha(int j, int k, int n);

struct DerivedExponents {
  double r;
  double q;      // +infinity when r == 2
  double inv_q;  // always finite
};

// (r, q) = (p r0', q solving the admissibility relation). Throws
// std::domain_error naming the violated bound when p falls outside
// [max((n+2)/n, (n+1)/(n-1)), min((n+3)/(n-1), 2)].
DerivedExponents derived_exponents(int n, double p);

enum class ConditionStatus { satisfied_strictly, equality, violated };

struct ConditionReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  ConditionStatus status = ConditionStatus::satisfied_strictly;

  double margin() const { return rhs - lhs; }
  bool holds() const { return status != ConditionStatus::violated; }
};

// Evaluates the scaling, concentration, ls, and technical inequalities plus
// the derived-exponent conditions c0..c2 at (n, gamma, p).
std::vector<ConditionReport> check_conditions(const ProblemParams& params);

const ConditionReport& find_condition(const std::vector<ConditionReport>& reports,
                                      const std::string& name);

enum class RegionLabel {
  ill_scaling,        // E side: scaling violated
  ill_concentration,  // F: concentration violated
  low_power,          // p <= (n+1)/(n-1)
  known_well_posed,   // A/B incl. endpoint c
  new_well_posed,     // C
  open_region_d,      // D
  endpoint_d,         // simultaneous concentration/technical endpoint
  endpoint_e,         // gamma = 0 on the concentration line
  out_of_scope,       // n <= 3
};

std::string to_string(RegionLabel label);

RegionLabel classify_region(const ProblemParams& params);

// Boundary curves p(gamma) of the four conditions.
double scaling_boundary_p(int n, double gamma);
double concentration_boundary_p(int n, double gamma);
double ls_boundary_p(int n, double gamma);
double technical_boundary_p(int n, double gamma);

// The excluded endpoint of the new well-posedness region, via the explicit
// square-root display, paired with its p on the concentration boundary.
struct EndpointD {
  double gamma;
  double p;
};
EndpointD endpoint_d(int n);

// The dual display of the same endpoint: gamma = (n+1)/4 - 1/(p-1).
double endpoint_d_gamma_dual(int n, double p);

// The five marked diagram points a..e as (gamma, p) pairs.
std::array<std::pair<double, double>, 5> diagram_points(int n);

}  // namespace tsw
