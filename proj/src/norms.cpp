#include "tsw/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tsw {

namespace {

bool is_inf(double e) { return std::isinf(e); }

void check_exponent(double e, const char* name) {
  if (!(e >= 1.0))
    throw std::invalid_argument(std::string("norm exponent ") + name +
                                " must lie in [1, infinity]");
}

}  // namespace

double lebesgue_norm(const Field& field, double r) {
  check_exponent(r, "r");
  const Field phys = transform(field, Representation::physical);
  if (is_inf(r)) return max_abs(phys);
  const double w = field.grid.cell_volume();
  if (r == 2.0) return std::sqrt(w * phys.samples.abs2().sum());
  if (r == 1.0) return w * phys.samples.abs().sum();
  const RealArray mags = phys.samples.abs();
  double acc = 0.0;
  for (std::int64_t i = 0; i < mags.size(); ++i) acc += std::pow(mags[i], r);
  return std::pow(w * acc, 1.0 / r);
}

double x_norm(const Field& field, double r, double p, const DyadicTiling& tiling) {
  check_exponent(r, "r");
  check_exponent(p, "p");
  if (!(tiling.grid == field.grid))
    throw std::invalid_argument("x_norm: tiling built for a different grid");

  const Field phys = transform(field, Representation::physical);
  const RealArray mags = phys.samples.abs();
  const double w = field.grid.cell_volume();
  const std::int64_t cubes = tiling.cube_count();

  // Per-cube L^p norms.
  std::vector<double> cube_norm(cubes, 0.0);
  if (is_inf(p)) {
    for (std::int64_t i = 0; i < mags.size(); ++i) {
      const std::int64_t c = tiling.cube_of(i);
      if (mags[i] > cube_norm[c]) cube_norm[c] = mags[i];
    }
  } else {
    if (p == 2.0) {
      for (std::int64_t i = 0; i < mags.size(); ++i)
        cube_norm[tiling.cube_of(i)] += mags[i] * mags[i];
    } else if (p == 1.0) {
      for (std::int64_t i = 0; i < mags.size(); ++i)
        cube_norm[tiling.cube_of(i)] += mags[i];
    } else {
      for (std::int64_t i = 0; i < mags.size(); ++i)
        cube_norm[tiling.cube_of(i)] += std::pow(mags[i], p);
    }
    for (auto& v : cube_norm) v = std::pow(w * v, 1.0 / p);
  }

  // l^r across cubes.
  if (is_inf(r)) {
    double best = 0.0;
    for (double v : cube_norm) best = std::max(best, v);
    return best;
  }
  double acc = 0.0;
  if (r == 2.0) {
    for (double v : cube_norm) acc += v * v;
  } else if (r == 1.0) {
    for (double v : cube_norm) acc += v;
  } else {
    for (double v : cube_norm) acc += std::pow(v, r);
  }
  return std::pow(acc, 1.0 / r);
}

double sobolev_norm(const Field& field, double gamma) {
  const Field hat = transform(field, Representation::frequency);
  const auto& m2 = squared_mode_norms(field.grid);
  const double dxi = field.grid.frequency_spacing();
  const int half = field.grid.points_per_axis / 2;
  const std::int32_t max_m2 = field.grid.dimension * half * half;

  std::vector<double> weight(max_m2 + 1);
  for (std::int32_t v = 0; v <= max_m2; ++v)
    weight[v] = std::pow(1.0 + dxi * std::sqrt(static_cast<double>(v)), 2.0 * gamma);

  double acc = 0.0;
  for (std::int64_t i = 0; i < hat.samples.size(); ++i)
    acc += weight[m2[i]] * std::norm(hat.samples[i]);
  return std::sqrt(field.grid.cell_volume() * acc);
}

SpatialNorm SpatialNorm::lebesgue(double r) {
  SpatialNorm s;
  s.kind = Kind::lebesgue;
  s.r = r;
  return s;
}

SpatialNorm SpatialNorm::two_scale(double r, double p, int k) {
  SpatialNorm s;
  s.kind = Kind::two_scale;
  s.r = r;
  s.p = p;
  s.k = k;
  return s;
}

SpatialNorm SpatialNorm::sobolev(double gamma) {
  SpatialNorm s;
  s.kind = Kind::sobolev;
  s.gamma = gamma;
  return s;
}

double spatial_norm(const Field& field, const SpatialNorm& spec) {
  switch (spec.kind) {
    case SpatialNorm::Kind::lebesgue:
      return lebesgue_norm(field, spec.r);
    case SpatialNorm::Kind::two_scale:
      return x_norm(field, spec.r, spec.p, make_tiling(field.grid, spec.k));
    case SpatialNorm::Kind::sobolev:
      return sobolev_norm(field, spec.gamma);
  }
  throw std::logic_error("spatial_norm: bad kind");
}

}  // namespace tsw
