#pragma once

#include "tsw/grid.hpp"

namespace tsw {

// Partition of the torus into axis-aligned cubes of side 2^-k, corners at
// integer multiples of 2^-k. Requires the grid spacing to divide the cube
// side, so every cube holds the same integer number of samples.
struct DyadicTiling {
  GridSpec grid;
  int k = 0;

  double cube_side() const;
  // cubes per axis, L * 2^k.
  int cubes_per_axis() const;
  // samples per cube per axis, N / (L 2^k).
  int points_per_cube_axis() const;
  std::int64_t cube_count() const;
  // Row-major cube index of a sample's linear index.
  std::int64_t cube_of(std::int64_t linear_index) const;
};

DyadicTiling make_tiling(const GridSpec& grid, int k);

// Largest valid k on this grid (cube side equal to the grid spacing).
int max_tiling_scale(const GridSpec& grid);

}  // namespace tsw
