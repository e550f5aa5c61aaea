#include "tsw/cutoffs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tsw {

namespace {

// exp(-1/x) mollifier half, 0 for x <= 0.
double bump_half(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

// Smooth ramp: 0 for x <= 0, 1 for x >= 1.
double smooth_ramp(double x) {
  const double a = bump_half(x);
  const double b = bump_half(1.0 - x);
  return a / (a + b);
}

double phi_symbol(double s) {
  if (s <= 4.0) return 1.0;
  if (s >= 8.0) return 0.0;
  return smooth_ramp((8.0 - s) / 4.0);
}

}  // namespace

CutoffFamily::CutoffFamily(const GridSpec& grid) {
  // Partition closes once phi(2^-J |xi|) = 1 for every grid mode, i.e.
  // 2^J >= |xi|_max / 4.
  const double xi_max = grid.max_frequency_norm();
  int J = 1;
  while (std::ldexp(1.0, J) < xi_max / 4.0) ++J;
  j_max_ = J;
}

double CutoffFamily::phi(double s) const { return phi_symbol(s); }

void CutoffFamily::check_j(int j) const {
  if (j < 1 || j > j_max_)
    throw std::invalid_argument("CutoffFamily: scale j = " + std::to_string(j) +
                                " out of range [1, " + std::to_string(j_max_) + "]");
}

double CutoffFamily::beta(int j, double s) const {
  check_j(j);
  return phi_symbol(std::ldexp(s, -j)) - phi_symbol(std::ldexp(s, -(j - 1)));
}

RadialProfile CutoffFamily::phi_profile() const {
  return RadialProfile{[](double s) { return phi_symbol(s); }, 0.0, 8.0};
}

RadialProfile CutoffFamily::beta_profile(int j) const {
  check_j(j);
  return RadialProfile{
      [j](double s) {
        return phi_symbol(std::ldexp(s, -j)) - phi_symbol(std::ldexp(s, -(j - 1)));
      },
      std::ldexp(4.0, j - 1), std::ldexp(8.0, j)};
}

Field project_lp(const Field& field, int j, const CutoffFamily& cutoffs) {
  return apply_radial_multiplier(field, cutoffs.beta_profile(j));
}

Field project_low(const Field& field, const CutoffFamily& cutoffs) {
  return apply_radial_multiplier(field, cutoffs.phi_profile());
}

Field localized_evolution(const Field& field, int j, double t, int sign,
                          const CutoffFamily& cutoffs) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("localized_evolution: sign must be +1 or -1");
  const RadialProfile beta = cutoffs.beta_profile(j);
  const double st = sign * t;
  return apply_complex_radial_multiplier(field, [&beta, st](double s) {
    const double b = beta(s);
    if (b == 0.0) return Complex(0.0, 0.0);
    return b * std::exp(Complex(0.0, st * s));
  });
}

}  // namespace tsw
