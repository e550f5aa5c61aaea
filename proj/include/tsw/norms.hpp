#pragma once

#include "tsw/field.hpp"
#include "tsw/tiling.hpp"

namespace tsw {

// Cell-weighted discrete L^r norm; r = infinity is the exact max of |f|.
double lebesgue_norm(const Field& field, double r);

// Two-scale norm: l^r over dyadic cubes of the L^p norm on each cube,
//   ( sum_Q ||f||_{L^p(Q)}^r )^{1/r},
// with cell-weighted Riemann sums inside each cube. Equals L^r when p = r.
double x_norm(const Field& field, double r, double p, const DyadicTiling& tiling);

// Inhomogeneous Sobolev norm, L^2 of (1+|xi|)^gamma weighted frequency
// samples.
double sobolev_norm(const Field& field, double gamma);

// Spatial part of a space-time norm specification.
struct SpatialNorm {
  enum class Kind { lebesgue, two_scale, sobolev };
  Kind kind = Kind::lebesgue;
  double r = 2.0;
  double p = 2.0;      // inner exponent, two_scale only
  int k = 0;           // tiling scale, two_scale only
  double gamma = 0.0;  // sobolev only

  static SpatialNorm lebesgue(double r);
  static SpatialNorm two_scale(double r, double p, int k);
  static SpatialNorm sobolev(double gamma);
};

double spatial_norm(const Field& field, const SpatialNorm& spec);

// L^q_t of a spatial norm; q = infinity is the sup over frames (which is
// also how C(H^gamma) is realized).
struct NormSpec {
  double temporal_exponent = 2.0;
  SpatialNorm spatial;
};

}  // namespace tsw
