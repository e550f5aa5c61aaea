#pragma once

#include <vector>

#include "tsw/cutoffs.hpp"
#include "tsw/exponents.hpp"
#include "tsw/norms.hpp"

namespace tsw {

// A function of time with Field snapshots on a common grid, sampled at
// uniformly spaced times in [0, T].
struct SpaceTimeField {
  std::vector<double> times;
  std::vector<Field> frames;

  double time_step() const { return times[1] - times[0]; }
  double final_time() const { return times.back(); }
};

// Uniform time grid 0 = t_0 < ... < t_M = T built from a frame factory.
SpaceTimeField sample_spacetime(double T, int steps,
                                const std::function<Field(double)>& frame_at);

void validate_spacetime(const SpaceTimeField& u);

// Frames restricted to [0, T']; T' must lie on the time grid.
SpaceTimeField restrict_time(const SpaceTimeField& u, double T);

SpaceTimeField operator-(const SpaceTimeField& a, const SpaceTimeField& b);

// Temporal L^q (trapezoid weights) of the per-frame spatial norm; q =
// infinity takes the sup over frames.
double spacetime_norm(const SpaceTimeField& u, const NormSpec& spec);

// sup over frames of the H^gamma norm — the C(H^gamma) norm.
double continuous_sobolev_norm(const SpaceTimeField& u, double gamma);

// The iteration norm: ||u||_{C(H^gamma)} + (sum_j ||S_j u||_{*,j}^2)^{1/2}
// with partials
//   ||v||_{*,j} = 2^{gamma j} sup_k 2^{alpha(j,k)/q} ||v||_{L^q_t X^{r,2}_k},
// j running over 1..j_max and k over the grid's valid tilings.
struct StarNorm {
  double total = 0.0;
  double c_hgamma = 0.0;
  std::vector<double> partials;  // index j-1 holds ||S_j u||_{*,j}
};

StarNorm star_norm(const SpaceTimeField& u, const ProblemParams& params,
                   const CutoffFamily& cutoffs);

}  // namespace tsw
