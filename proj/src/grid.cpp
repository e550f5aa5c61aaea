#include "tsw/grid.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tsw {

std::int64_t GridSpec::total_points() const {
  std::int64_t total = 1;
  for (int a = 0; a < dimension; ++a) total *= points_per_axis;
  return total;
}

double GridSpec::cell_volume() const {
  return std::pow(spacing(), dimension);
}

double GridSpec::frequency_spacing() const {
  return 2.0 * std::numbers::pi / box_length;
}

double GridSpec::nyquist_radius() const {
  return std::numbers::pi * points_per_axis / box_length;
}

double GridSpec::max_frequency_norm() const {
  return nyquist_radius() * std::sqrt(static_cast<double>(dimension));
}

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

bool is_power_of_two(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) return false;
  int exp = 0;
  return std::frexp(v, &exp) == 0.5;
}

GridSpec make_grid(int dimension, int points_per_axis, double box_length,
                   std::int64_t max_points) {
  if (dimension < 1) throw std::invalid_argument("make_grid: dimension must be >= 1");
  if (!is_power_of_two(static_cast<std::int64_t>(points_per_axis)))
    throw std::invalid_argument("make_grid: points per axis (" +
                                std::to_string(points_per_axis) +
                                ") must be a power of two");
  if (!is_power_of_two(box_length))
    throw std::invalid_argument("make_grid: box length must be a power of two");

  double total = std::pow(static_cast<double>(points_per_axis), dimension);
  if (total > static_cast<double>(max_points))
    throw std::invalid_argument("make_grid: N^n exceeds the point budget of " +
                                std::to_string(max_points));

  return GridSpec{dimension, points_per_axis, box_length};
}

void unravel_index(const GridSpec& grid, std::int64_t linear, int* axis_indices) {
  const int N = grid.points_per_axis;
  for (int a = grid.dimension - 1; a >= 0; --a) {
    axis_indices[a] = static_cast<int>(linear % N);
    linear /= N;
  }
}

namespace {
std::mutex g_mode_cache_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const std::vector<std::int32_t>>>
    g_mode_cache;
}  // namespace

const std::vector<std::int32_t>& squared_mode_norms(const GridSpec& grid) {
  const std::pair<int, int> key{grid.dimension, grid.points_per_axis};
  std::lock_guard<std::mutex> lock(g_mode_cache_mutex);
  auto it = g_mode_cache.find(key);
  if (it == g_mode_cache.end()) {
    const int n = grid.dimension;
    const int N = grid.points_per_axis;
    auto table = std::make_shared<std::vector<std::int32_t>>(grid.total_points());
    std::vector<int> idx(n, 0);
    for (std::int64_t lin = 0; lin < grid.total_points(); ++lin) {
      std::int32_t m2 = 0;
      for (int a = 0; a < n; ++a) {
        int w = idx[a] < N / 2 ? idx[a] : idx[a] - N;
        m2 += static_cast<std::int32_t>(w) * w;
      }
      (*table)[lin] = m2;
      for (int a = n - 1; a >= 0; --a) {
        if (++idx[a] < N) break;
        idx[a] = 0;
      }
    }
    it = g_mode_cache.emplace(key, std::move(table)).first;
  }
  return *it->second;
}

}  // namespace tsw
