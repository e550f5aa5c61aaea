#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace tsw {

using Complex = std::complex<double>;
using ComplexArray = Eigen::ArrayXcd;
using RealArray = Eigen::ArrayXd;

// Periodic sample grid on the torus [0, L)^n with N points per axis.
// Physical samples sit at x = (L/N) m, m in [0,N)^n; frequency samples are
// the wavenumbers xi = (2 pi / L) m with integer m in [-N/2, N/2)^n.
// Sample storage is row-major with the last axis fastest; frequency samples
// use standard DFT ordering per axis (index i holds wavenumber i for
// i < N/2 and i - N otherwise).
struct GridSpec {
  int dimension = 1;
  int points_per_axis = 2;
  double box_length = 1.0;

  std::int64_t total_points() const;
  double spacing() const { return box_length / points_per_axis; }
  double cell_volume() const;
  // Smallest positive wavenumber, 2 pi / L.
  double frequency_spacing() const;
  // Per-axis frequency half-width, pi N / L.
  double nyquist_radius() const;
  // Largest |xi| present on the grid (attained at a box corner).
  double max_frequency_norm() const;

  int wavenumber_index(int axis_index) const {
    return axis_index < points_per_axis / 2 ? axis_index
                                            : axis_index - points_per_axis;
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

constexpr std::int64_t default_grid_point_budget() { return std::int64_t{1} << 24; }

// Validates and builds a GridSpec. N and L must be powers of two and the
// total point count must stay within max_points.
GridSpec make_grid(int dimension, int points_per_axis, double box_length = 1.0,
                   std::int64_t max_points = default_grid_point_budget());

bool is_power_of_two(std::int64_t v);
bool is_power_of_two(double v);

// |m|^2 per sample, with m the integer wavenumber vector of that mode.
// Shared per (dimension, N); the cache is internally synchronized.
const std::vector<std::int32_t>& squared_mode_norms(const GridSpec& grid);

// Decomposes a row-major linear index into per-axis indices.
void unravel_index(const GridSpec& grid, std::int64_t linear, int* axis_indices);

}  // namespace tsw
