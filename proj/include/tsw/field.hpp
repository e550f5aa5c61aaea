#pragma once

#include <functional>
#include <limits>

#include "tsw/grid.hpp"

namespace tsw {

enum class Representation : std::uint8_t { physical = 0, frequency = 1 };

// A complex-valued function sampled on a periodic grid, in either physical
// or frequency representation. Immutable by convention: operations return
// new fields.
struct Field {
  GridSpec grid;
  Representation representation = Representation::physical;
  ComplexArray samples;
};

// Zero field in the given representation.
Field make_field(const GridSpec& grid,
                 Representation rep = Representation::physical);

// Unitary transform between representations; no-op if already there.
// The discrete l2 sum of |samples|^2 is preserved.
Field transform(const Field& field, Representation target);

// Cell-weighted discrete L2 norm, identical in both representations.
double l2_norm(const Field& field);

double max_abs(const Field& field);

// Radial symbol m(|xi|), zero outside [support_lo, support_hi].
struct RadialProfile {
  std::function<double(double)> evaluator;
  double support_lo = 0.0;
  double support_hi = std::numeric_limits<double>::infinity();

  double operator()(double s) const {
    if (s < support_lo || s > support_hi) return 0.0;
    return evaluator(s);
  }
};

// Applies the Fourier multiplier m(sqrt(-Laplace)); output representation
// matches the input.
Field apply_radial_multiplier(const Field& field, const RadialProfile& m);

// Same, for a complex-valued radial symbol (evolution phases and kernels).
Field apply_complex_radial_multiplier(const Field& field,
                                      const std::function<Complex(double)>& m);

// field shifted by whole grid cells (circular), physical representation.
Field shift_cells(const Field& field, const std::vector<int>& cells);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(Complex scale, const Field& f);

}  // namespace tsw
