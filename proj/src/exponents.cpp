#include "tsw/exponents.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tsw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEqualityTol = 1e-12;
constexpr double kEndpointTol = 1e-9;

// Reconstructs a small-denominator fraction from a double, so that exponent
// identities fed with values like 9/5 reproduce the textbook rationals
// (54/25, 18) bit-for-bit. Falls back to num/den = value/1-style failure when
// no fraction within 4 ulps exists.
bool reconstruct_fraction(double value, long& num, long& den) {
  constexpr long kMaxDen = 1 << 16;
  double x = value;
  long p_prev = 1, p_curr = static_cast<long>(std::floor(x));
  long q_prev = 0, q_curr = 1;
  x -= std::floor(x);
  for (int iter = 0; iter < 64 && q_curr <= kMaxDen; ++iter) {
    const double approx = static_cast<double>(p_curr) / static_cast<double>(q_curr);
    if (std::abs(approx - value) <= 4.0 * std::abs(value) *
                                        std::numeric_limits<double>::epsilon()) {
      num = p_curr;
      den = q_curr;
      return true;
    }
    if (x == 0.0) break;
    x = 1.0 / x;
    const double a = std::floor(x);
    if (a > static_cast<double>(kMaxDen)) break;
    x -= a;
    const long ai = static_cast<long>(a);
    const long p_next = ai * p_curr + p_prev;
    const long q_next = ai * q_curr + q_prev;
    p_prev = p_curr;
    p_curr = p_next;
    q_prev = q_curr;
    q_curr = q_next;
  }
  return false;
}

ConditionStatus status_of(double lhs, double rhs) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  if (std::abs(lhs - rhs) <= kEqualityTol * scale) return ConditionStatus::equality;
  return lhs < rhs ? ConditionStatus::satisfied_strictly
                   : ConditionStatus::violated;
}

}  // namespace

DerivedExponents derived_exponents(int n, double p) {
  if (n <= 3) throw std::domain_error("derived_exponents: requires n > 3");
  const double lower = std::max((n + 2.0) / n, (n + 1.0) / (n - 1.0));
  const double upper = std::min((n + 3.0) / (n - 1.0), 2.0);
  const double tol = 1e-12;
  if (p < lower - tol)
    throw std::domain_error("derived_exponents: p violates p >= max((n+2)/n, (n+1)/(n-1)) = " +
                            std::to_string(lower));
  if (p > upper + tol)
    throw std::domain_error("derived_exponents: p violates p <= min((n+3)/(n-1), 2) = " +
                            std::to_string(upper));

  // r = p 2(n-1)/(n+1); 1/q = ((n-1) p - (n+1)) / (4 p). Exact rational
  // inputs are resolved as fractions so that e.g. p = 9/5, n = 4 yields
  // r = 54/25 and q = 18 exactly.
  long pn = 0, pd = 0;
  DerivedExponents out{};
  if (reconstruct_fraction(p, pn, pd)) {
    const long rn = pn * 2 * (n - 1);
    const long rd = pd * (n + 1);
    out.r = static_cast<double>(rn) / static_cast<double>(rd);
    const long qn = 4 * pn;
    const long qd = (n - 1) * pn - (n + 1) * pd;
    if (qd == 0) {
      out.q = kInf;
      out.inv_q = 0.0;
    } else {
      out.q = static_cast<double>(qn) / static_cast<double>(qd);
      out.inv_q = static_cast<double>(qd) / static_cast<double>(qn);
    }
  } else {
    out.r = p * 2.0 * (n - 1) / (n + 1);
    const double qd = (n - 1) * p - (n + 1);
    if (qd == 0.0) {
      out.q = kInf;
      out.inv_q = 0.0;
    } else {
      out.q = 4.0 * p / qd;
      out.inv_q = qd / (4.0 * p);
    }
  }

  if (!is_sharp_admissible(out.q, out.r, n))
    throw std::domain_error(
        "derived_exponents: (q, r) is not a sharp wave-admissible pair");
  return out;
}

ProblemParams make_params(int n, double gamma, double p) {
  if (n < 2) throw std::invalid_argument("make_params: n must be >= 2");
  if (gamma < 0.0) throw std::invalid_argument("make_params: gamma must be >= 0");
  if (!(p > 1.0)) throw std::invalid_argument("make_params: p must be > 1");

  ProblemParams out;
  out.n = n;
  out.gamma = gamma;
  out.p = p;
  out.gamma0 = (n - 3.0) / (2.0 * (n - 1.0));
  out.r0 = n > 3 ? 2.0 * (n - 1.0) / (n - 3.0) : kInf;
  out.r0_prime = 2.0 * (n - 1.0) / (n + 1.0);
  out.p0 = (n + 1.0) * (n + 1.0) / ((n - 1.0) * (n - 1.0) + 4.0);
  out.r = kNaN;
  out.q = kNaN;
  out.inv_q = kNaN;
  if (n > 3) {
    try {
      const DerivedExponents d = derived_exponents(n, p);
      out.r = d.r;
      out.q = d.q;
      out.inv_q = d.inv_q;
    } catch (const std::domain_error&) {
      // p outside the window: r, q stay NaN; condition checks fall back to
      // formal evaluation.
    }
  }
  return out;
}

bool is_sharp_admissible(double q, double r, int n) {
  if (n <= 3) throw std::domain_error("is_sharp_admissible: requires n > 3");
  if (!(q >= 2.0) || !(r >= 2.0)) return false;
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
  const double lhs = inv_q + 0.5 * (n - 1.0) * inv_r;
  const double rhs = 0.25 * (n - 1.0);
  return std::abs(lhs - rhs) <= 1e-12;
}

double alpha(int j, int k, int n) {
  if (j < 0 || k < 0) throw std::invalid_argument("alpha: j, k must be >= 0");
  if (n < 2) throw std::invalid_argument("alpha: n must be >= 2");
  if (j <= k) return (2.0 * n * k - (n + 1.0) * j) / (n - 1.0);
  if (j <= 2 * k) return 2.0 * k - j;
  return 0.0;
}

std::vector<ConditionReport> check_conditions(const ProblemParams& params) {
  const int n = params.n;
  const double g = params.gamma;
  const double p = params.p;

  std::vector<ConditionReport> reports;
  auto add = [&reports](const std::string& name, double lhs, double rhs) {
    reports.push_back({name, lhs, rhs, status_of(lhs, rhs)});
  };

  add("scaling", p * (n / 2.0 - g), (n + 4.0) / 2.0 - g);
  add("concentration", p * ((n + 1.0) / 4.0 - g), (n + 5.0) / 4.0 - g);
  add("ls", p * ((n + 1.0) / 4.0 - g),
      (n + 1.0) / (2.0 * n) * ((n + 3.0) / 2.0 - g));
  add("technical", p * (n / 4.0 - g), 0.5 * ((n + 3.0) / 2.0 - g));

  // c0..c2 use the derived q; evaluate formally via 1/q so the q = infinity
  // boundary is exact. Outside the derived window fall back to the direct
  // formula for 1/q.
  double inv_q = params.inv_q;
  if (std::isnan(inv_q)) inv_q = ((n - 1.0) * p - (n + 1.0)) / (4.0 * p);
  const double g0 = params.gamma0;

  // c0: 2 <= q/p, recast as 1/q <= 1/(2p).
  add("c0", inv_q, 1.0 / (2.0 * p));
  // c1, c2: lhs >= 0 recast as 0 <= lhs.
  const double common = (g0 - g) / p - 2.0 * n / (n - 1.0) * inv_q;
  add("c1", 0.0, common + g + inv_q);
  add("c2", 0.0, common + 2.0 * g);
  return reports;
}

const ConditionReport& find_condition(const std::vector<ConditionReport>& reports,
                                      const std::string& name) {
  for (const auto& r : reports)
    if (r.name == name) return r;
  throw std::invalid_argument("find_condition: unknown condition " + name);
}

std::string to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::ill_scaling: return "ill_scaling";
    case RegionLabel::ill_concentration: return "ill_concentration";
    case RegionLabel::low_power: return "low_power";
    case RegionLabel::known_well_posed: return "known_well_posed";
    case RegionLabel::new_well_posed: return "new_well_posed";
    case RegionLabel::open_region_d: return "open_region_d";
    case RegionLabel::endpoint_d: return "endpoint_d";
    case RegionLabel::endpoint_e: return "endpoint_e";
    case RegionLabel::out_of_scope: return "out_of_scope";
  }
  return "unknown";
}

RegionLabel classify_region(const ProblemParams& params) {
  const int n = params.n;
  if (n <= 3) return RegionLabel::out_of_scope;

  const auto reports = check_conditions(params);
  const auto& scaling = find_condition(reports, "scaling");
  const auto& concentration = find_condition(reports, "concentration");
  const auto& ls = find_condition(reports, "ls");
  const auto& technical = find_condition(reports, "technical");

  if (!scaling.holds()) return RegionLabel::ill_scaling;
  if (!concentration.holds()) return RegionLabel::ill_concentration;
  if (params.p <= (n + 1.0) / (n - 1.0) + kEqualityTol)
    return RegionLabel::low_power;
  if (ls.holds()) return RegionLabel::known_well_posed;

  const bool gamma_zero = params.gamma <= kEqualityTol;
  if (!gamma_zero && params.gamma < params.gamma0 && technical.holds()) {
    const EndpointD d = endpoint_d(n);
    if (std::abs(params.gamma - d.gamma) <= kEndpointTol &&
        std::abs(params.p - d.p) <= kEndpointTol)
      return RegionLabel::endpoint_d;
    return RegionLabel::new_well_posed;
  }

  if (gamma_zero && concentration.status == ConditionStatus::equality)
    return RegionLabel::endpoint_e;
  return RegionLabel::open_region_d;
}

double scaling_boundary_p(int n, double gamma) {
  return ((n + 4.0) / 2.0 - gamma) / (n / 2.0 - gamma);
}

double concentration_boundary_p(int n, double gamma) {
  return ((n + 5.0) / 4.0 - gamma) / ((n + 1.0) / 4.0 - gamma);
}

double ls_boundary_p(int n, double gamma) {
  return (n + 1.0) / (2.0 * n) * ((n + 3.0) / 2.0 - gamma) /
         ((n + 1.0) / 4.0 - gamma);
}

double technical_boundary_p(int n, double gamma) {
  return 0.5 * ((n + 3.0) / 2.0 - gamma) / (n / 4.0 - gamma);
}

EndpointD endpoint_d(int n) {
  if (n <= 3) throw std::domain_error("endpoint_d: requires n > 3");
  const double gamma =
      (n + 3.0 - std::sqrt(static_cast<double>(n) * n - 2.0 * n + 33.0)) / 8.0;
  return {gamma, concentration_boundary_p(n, gamma)};
}

double endpoint_d_gamma_dual(int n, double p) {
  return (n + 1.0) / 4.0 - 1.0 / (p - 1.0);
}

std::array<std::pair<double, double>, 5> diagram_points(int n) {
  const double g0 = (n - 3.0) / (2.0 * (n - 1.0));
  const double p0 = (n + 1.0) * (n + 1.0) / ((n - 1.0) * (n - 1.0) + 4.0);
  const EndpointD d = endpoint_d(n);
  return {{
      {1.0, (n + 2.0) / (n - 2.0)},          // a: energy-critical problem
      {0.5, (n + 3.0) / (n - 1.0)},          // b: conformally invariant problem
      {g0, p0},                              // c
      {d.gamma, d.p},                        // d
      {0.0, (n + 5.0) / (n + 1.0)},          // e
  }};
}

}  // namespace tsw
