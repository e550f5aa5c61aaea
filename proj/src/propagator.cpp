#include "tsw/propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace tsw {

namespace {

// sin(t s)/s with the removable singularity filled by its limit t.
Complex sine_kernel(double t, double s) {
  if (s == 0.0) return Complex(t, 0.0);
  return Complex(std::sin(t * s) / s, 0.0);
}

std::size_t frame_index_at(const SpaceTimeField& F, double t) {
  const double dt = F.time_step();
  const double idx = (t - F.times.front()) / dt;
  const auto i = static_cast<std::int64_t>(std::lround(idx));
  if (i < 0 || i >= static_cast<std::int64_t>(F.times.size()) ||
      std::abs(idx - static_cast<double>(i)) > 1e-9)
    throw std::invalid_argument("duhamel: t must land on the frame time grid");
  return static_cast<std::size_t>(i);
}

}  // namespace

void validate_cauchy(const CauchyData& data) {
  if (!(data.f.grid == data.g.grid))
    throw std::invalid_argument("CauchyData: f and g must share a grid");
}

Field free_solution(const CauchyData& data, double t) {
  validate_cauchy(data);
  const Field cos_part = apply_complex_radial_multiplier(
      data.f, [t](double s) { return Complex(std::cos(t * s), 0.0); });
  const Field sin_part = apply_complex_radial_multiplier(
      data.g, [t](double s) { return sine_kernel(t, s); });
  return transform(cos_part, data.f.representation) +
         transform(sin_part, data.f.representation);
}

Field free_velocity(const CauchyData& data, double t) {
  validate_cauchy(data);
  const Field df = apply_complex_radial_multiplier(
      data.f, [t](double s) { return Complex(-s * std::sin(t * s), 0.0); });
  const Field dg = apply_complex_radial_multiplier(
      data.g, [t](double s) { return Complex(std::cos(t * s), 0.0); });
  return transform(df, data.f.representation) +
         transform(dg, data.f.representation);
}

Field duhamel(const SpaceTimeField& F, double t) {
  validate_spacetime(F);
  const std::size_t end = frame_index_at(F, t);
  const GridSpec& grid = F.frames[0].grid;

  Field acc = make_field(grid, Representation::frequency);
  if (end == 0) return transform(acc, F.frames[0].representation);

  const double dt = F.time_step();
  const auto& m2 = squared_mode_norms(grid);
  const double dxi = grid.frequency_spacing();
  const int half = grid.points_per_axis / 2;
  const std::int32_t max_m2 = grid.dimension * half * half;
  std::vector<double> rho(max_m2 + 1);
  for (std::int32_t v = 0; v <= max_m2; ++v)
    rho[v] = dxi * std::sqrt(static_cast<double>(v));

  // Composite trapezoid in s of sin((t-s)|xi|)/|xi| F(s), per mode.
  for (std::size_t i = 0; i <= end; ++i) {
    const double wt = (i == 0 || i == end) ? 0.5 * dt : dt;
    const double lag = t - F.times[i];
    const Field hat = transform(F.frames[i], Representation::frequency);
    for (std::int64_t m = 0; m < hat.samples.size(); ++m)
      acc.samples[m] += wt * sine_kernel(lag, rho[m2[m]]) * hat.samples[m];
  }
  return transform(acc, F.frames[0].representation);
}

Field localized_pieces(const CauchyData& data, const SpaceTimeField& F, int j,
                       double t, const CutoffFamily& cutoffs) {
  validate_cauchy(data);
  const RadialProfile beta = cutoffs.beta_profile(j);
  const double two_j = std::ldexp(1.0, j);
  const double inv_two_j = std::ldexp(1.0, -j);

  // cos(ts) beta = sum_pm (beta/2) e^{pm its};
  // (sin(ts)/s) beta = sum_pm (pm i 2^-j) (2^j beta / (-2s)) e^{pm its}.
  auto half_wave = [&](const Field& field, double time, int sign,
                       const std::function<double(double)>& weight) {
    return apply_complex_radial_multiplier(field, [&](double s) {
      const double b = beta(s);
      if (b == 0.0) return Complex(0.0, 0.0);
      return weight(s) * b * std::exp(Complex(0.0, sign * time * s));
    });
  };
  const auto cos_weight = [](double) { return 0.5; };
  const auto sine_weight = [two_j](double s) { return -two_j / (2.0 * s); };

  Field out = make_field(data.f.grid, data.f.representation);
  for (int sign : {+1, -1}) {
    const Complex pm_i(0.0, sign * inv_two_j);
    out = out + half_wave(data.f, t, sign, cos_weight);
    out = out + pm_i * half_wave(data.g, t, sign, sine_weight);
  }

  // Retarded term: same +- splitting of the Duhamel kernel, with the
  // U_j(t) U_j(s)^* composition carrying beta^2.
  validate_spacetime(F);
  const std::size_t end = frame_index_at(F, t);
  if (end > 0) {
    const double dt = F.time_step();
    Field acc = make_field(data.f.grid, Representation::frequency);
    for (std::size_t i = 0; i <= end; ++i) {
      const double wt = (i == 0 || i == end) ? 0.5 * dt : dt;
      const double lag = t - F.times[i];
      const Field hat = transform(F.frames[i], Representation::frequency);
      for (int sign : {+1, -1}) {
        const Complex pm_i(0.0, sign * inv_two_j);
        const Field piece = apply_complex_radial_multiplier(
            hat, [&](double s) {
              const double b = beta(s);
              if (b == 0.0) return Complex(0.0, 0.0);
              return sine_weight(s) * b * std::exp(Complex(0.0, sign * lag * s));
            });
        acc.samples += (wt * pm_i) * piece.samples;
      }
    }
    out = out + transform(acc, data.f.representation);
  }
  return out;
}

double residual_dalembertian(const SpaceTimeField& u, const SpaceTimeField& F) {
  validate_spacetime(u);
  validate_spacetime(F);
  if (u.frames.size() < 3)
    throw std::invalid_argument("residual_dalembertian: need >= 3 frames");
  if (u.frames.size() != F.frames.size())
    throw std::invalid_argument("residual_dalembertian: u and F frame counts differ");

  const double dt = u.time_step();
  const double inv_dt2 = 1.0 / (dt * dt);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < u.frames.size(); ++i) {
    Field utt = u.frames[i];
    utt.samples = (u.frames[i + 1].samples - 2.0 * u.frames[i].samples +
                   u.frames[i - 1].samples) *
                  inv_dt2;
    const Field lap = apply_complex_radial_multiplier(
        u.frames[i], [](double s) { return Complex(-s * s, 0.0); });
    Field res = transform(lap, u.frames[i].representation);
    res.samples -= utt.samples;
    res = res - transform(F.frames[i], u.frames[i].representation);
    worst = std::max(worst, l2_norm(res));
  }
  return worst;
}

}  // namespace tsw
