#include "tsw/tiling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tsw {

double DyadicTiling::cube_side() const { return std::ldexp(1.0, -k); }

int DyadicTiling::cubes_per_axis() const {
  return static_cast<int>(std::lround(grid.box_length * std::ldexp(1.0, k)));
}

int DyadicTiling::points_per_cube_axis() const {
  return grid.points_per_axis / cubes_per_axis();
}

std::int64_t DyadicTiling::cube_count() const {
  std::int64_t total = 1;
  for (int a = 0; a < grid.dimension; ++a) total *= cubes_per_axis();
  return total;
}

std::int64_t DyadicTiling::cube_of(std::int64_t linear_index) const {
  const int N = grid.points_per_axis;
  const int side = points_per_cube_axis();
  const int C = cubes_per_axis();
  std::int64_t cube = 0;
  // Peel axis digits from fastest to slowest, assembling the cube index in
  // the same row-major order.
  std::int64_t mult = 1;
  for (int a = grid.dimension - 1; a >= 0; --a) {
    const int digit = static_cast<int>(linear_index % N);
    linear_index /= N;
    cube += mult * (digit / side);
    mult *= C;
  }
  return cube;
}

DyadicTiling make_tiling(const GridSpec& grid, int k) {
  if (k < 0) throw std::invalid_argument("make_tiling: k must be >= 0");
  const double side = std::ldexp(1.0, -k);
  if (side > grid.box_length)
    throw std::invalid_argument("make_tiling: cube side exceeds the box");
  const double per_cube = side / grid.spacing();
  if (per_cube < 1.0 || std::rint(per_cube) != per_cube)
    throw std::invalid_argument(
        "make_tiling: grid spacing does not divide cube side 2^-" +
        std::to_string(k));
  return DyadicTiling{grid, k};
}

int max_tiling_scale(const GridSpec& grid) {
  // 2^k <= N / L, both powers of two.
  return static_cast<int>(std::lround(
      std::log2(grid.points_per_axis / grid.box_length)));
}

}  // namespace tsw
