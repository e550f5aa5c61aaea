#include "tsw/spacetime.hpp"

#include <cmath>
#include <stdexcept>

namespace tsw {

SpaceTimeField sample_spacetime(double T, int steps,
                                const std::function<Field(double)>& frame_at) {
  if (!(T > 0.0)) throw std::invalid_argument("sample_spacetime: T must be > 0");
  if (steps < 1) throw std::invalid_argument("sample_spacetime: need >= 1 step");
  SpaceTimeField u;
  u.times.reserve(steps + 1);
  u.frames.reserve(steps + 1);
  const double dt = T / steps;
  for (int i = 0; i <= steps; ++i) {
    u.times.push_back(dt * i);
    u.frames.push_back(frame_at(dt * i));
  }
  return u;
}

void validate_spacetime(const SpaceTimeField& u) {
  if (u.times.size() < 2)
    throw std::invalid_argument("SpaceTimeField: need at least two frames");
  if (u.times.size() != u.frames.size())
    throw std::invalid_argument("SpaceTimeField: times/frames size mismatch");
  const double dt = u.times[1] - u.times[0];
  if (!(dt > 0.0)) throw std::invalid_argument("SpaceTimeField: times must increase");
  for (std::size_t i = 1; i < u.times.size(); ++i) {
    if (std::abs(u.times[i] - u.times[i - 1] - dt) > 1e-9 * std::max(1.0, dt))
      throw std::invalid_argument("SpaceTimeField: time grid must be uniform");
    if (!(u.frames[i].grid == u.frames[0].grid))
      throw std::invalid_argument("SpaceTimeField: frames on mismatched grids");
  }
}

SpaceTimeField restrict_time(const SpaceTimeField& u, double T) {
  validate_spacetime(u);
  const double dt = u.time_step();
  const double idx = T / dt;
  const auto i = static_cast<std::size_t>(std::lround(idx));
  if (i < 1 || i >= u.times.size() || std::abs(idx - std::lround(idx)) > 1e-9)
    throw std::invalid_argument("restrict_time: T must land on the time grid");
  SpaceTimeField out;
  out.times.assign(u.times.begin(), u.times.begin() + i + 1);
  out.frames.assign(u.frames.begin(), u.frames.begin() + i + 1);
  return out;
}

SpaceTimeField operator-(const SpaceTimeField& a, const SpaceTimeField& b) {
  if (a.times.size() != b.times.size())
    throw std::invalid_argument("SpaceTimeField difference: length mismatch");
  SpaceTimeField out = a;
  for (std::size_t i = 0; i < a.frames.size(); ++i)
    out.frames[i] = a.frames[i] - b.frames[i];
  return out;
}

double spacetime_norm(const SpaceTimeField& u, const NormSpec& spec) {
  validate_spacetime(u);
  const double q = spec.temporal_exponent;
  if (!(q >= 1.0))
    throw std::invalid_argument("spacetime_norm: temporal exponent must be >= 1");

  if (std::isinf(q)) {
    double best = 0.0;
    for (const Field& f : u.frames)
      best = std::max(best, spatial_norm(f, spec.spatial));
    return best;
  }

  const double dt = u.time_step();
  double acc = 0.0;
  const std::size_t M = u.frames.size() - 1;
  for (std::size_t i = 0; i <= M; ++i) {
    const double wt = (i == 0 || i == M) ? 0.5 * dt : dt;
    acc += wt * std::pow(spatial_norm(u.frames[i], spec.spatial), q);
  }
  return std::pow(acc, 1.0 / q);
}

double continuous_sobolev_norm(const SpaceTimeField& u, double gamma) {
  validate_spacetime(u);
  double best = 0.0;
  for (const Field& f : u.frames) best = std::max(best, sobolev_norm(f, gamma));
  return best;
}

StarNorm star_norm(const SpaceTimeField& u, const ProblemParams& params,
                   const CutoffFamily& cutoffs) {
  validate_spacetime(u);
  if (params.n <= 3)
    throw std::invalid_argument("star_norm: params require n > 3");
  if (std::isnan(params.r))
    throw std::invalid_argument("star_norm: params lack derived exponents");

  const GridSpec& grid = u.frames[0].grid;
  const int j_hi = cutoffs.j_max();
  const int k_hi = max_tiling_scale(grid);
  const double dt = u.time_step();
  const std::size_t M = u.frames.size() - 1;

  StarNorm out;
  out.c_hgamma = continuous_sobolev_norm(u, params.gamma);
  out.partials.assign(j_hi, 0.0);

  double sum_sq = 0.0;
  for (int j = 1; j <= j_hi; ++j) {
    // S_j frames once per scale; every k reuses them.
    std::vector<Field> piece;
    piece.reserve(u.frames.size());
    for (const Field& f : u.frames) piece.push_back(project_lp(f, j, cutoffs));

    double partial = 0.0;
    for (int k = 0; k <= k_hi; ++k) {
      const DyadicTiling tiling = make_tiling(grid, k);
      double time_norm;
      if (std::isinf(params.q)) {
        time_norm = 0.0;
        for (const Field& f : piece)
          time_norm = std::max(time_norm, x_norm(f, params.r, 2.0, tiling));
      } else {
        double acc = 0.0;
        for (std::size_t i = 0; i <= M; ++i) {
          const double wt = (i == 0 || i == M) ? 0.5 * dt : dt;
          acc += wt * std::pow(x_norm(piece[i], params.r, 2.0, tiling), params.q);
        }
        time_norm = std::pow(acc, 1.0 / params.q);
      }
      const double gain = std::exp2(alpha(j, k, params.n) * params.inv_q);
      partial = std::max(partial, gain * time_norm);
    }
    partial *= std::exp2(params.gamma * j);
    out.partials[j - 1] = partial;
    sum_sq += partial * partial;
  }

  out.total = out.c_hgamma + std::sqrt(sum_sq);
  return out;
}

}  // namespace tsw
