#include "tsw/field.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace tsw {

Field make_field(const GridSpec& grid, Representation rep) {
  Field f;
  f.grid = grid;
  f.representation = rep;
  f.samples = ComplexArray::Zero(grid.total_points());
  return f;
}

namespace {

void check_field(const Field& f, const char* where) {
  if (f.samples.size() != f.grid.total_points())
    throw std::invalid_argument(std::string(where) + ": sample count does not match grid");
}

// In-place 1D passes along every axis. `forward` selects the DFT direction;
// scaling is fixed up by the caller to keep the transform unitary.
void fft_all_axes(const GridSpec& grid, ComplexArray& data, bool forward) {
  const int N = grid.points_per_axis;
  const int n = grid.dimension;
  const std::int64_t total = grid.total_points();

  Eigen::FFT<double> fft;
  std::vector<Complex> line(N), out(N);

  std::int64_t stride = total / N;  // axis 0 first (slowest axis)
  for (int axis = 0; axis < n; ++axis) {
    const std::int64_t nlines = total / N;
    for (std::int64_t l = 0; l < nlines; ++l) {
      const std::int64_t base = (l / stride) * stride * N + (l % stride);
      for (int i = 0; i < N; ++i) line[i] = data[base + i * stride];
      if (forward)
        fft.fwd(out, line);
      else
        fft.inv(out, line);
      for (int i = 0; i < N; ++i) data[base + i * stride] = out[i];
    }
    stride /= N;
  }
}

}  // namespace

Field transform(const Field& field, Representation target) {
  check_field(field, "transform");
  if (field.representation == target) return field;

  Field out = field;
  out.representation = target;
  const int N = field.grid.points_per_axis;
  const int n = field.grid.dimension;
  if (target == Representation::frequency) {
    fft_all_axes(field.grid, out.samples, true);
    out.samples *= std::pow(static_cast<double>(N), -0.5 * n);
  } else {
    // Eigen's inverse scales by 1/N per axis; restore the unitary factor.
    fft_all_axes(field.grid, out.samples, false);
    out.samples *= std::pow(static_cast<double>(N), 0.5 * n);
  }
  return out;
}

double l2_norm(const Field& field) {
  check_field(field, "l2_norm");
  return std::sqrt(field.grid.cell_volume() * field.samples.abs2().sum());
}

double max_abs(const Field& field) {
  check_field(field, "max_abs");
  return field.samples.abs().maxCoeff();
}

namespace {

template <typename Symbol>
Field apply_symbol(const Field& field, const Symbol& symbol) {
  const Representation original = field.representation;
  Field hat = transform(field, Representation::frequency);

  const auto& m2 = squared_mode_norms(field.grid);
  const double dxi = field.grid.frequency_spacing();
  const std::int32_t max_m2 =
      field.grid.dimension *
      (field.grid.points_per_axis / 2) * (field.grid.points_per_axis / 2);

  std::vector<Complex> table(max_m2 + 1);
  for (std::int32_t v = 0; v <= max_m2; ++v)
    table[v] = symbol(dxi * std::sqrt(static_cast<double>(v)));

  for (std::int64_t i = 0; i < hat.samples.size(); ++i)
    hat.samples[i] *= table[m2[i]];

  return transform(hat, original);
}

}  // namespace

Field apply_radial_multiplier(const Field& field, const RadialProfile& m) {
  check_field(field, "apply_radial_multiplier");
  return apply_symbol(field, [&m](double s) { return Complex(m(s), 0.0); });
}

Field apply_complex_radial_multiplier(const Field& field,
                                      const std::function<Complex(double)>& m) {
  check_field(field, "apply_complex_radial_multiplier");
  return apply_symbol(field, m);
}

Field shift_cells(const Field& field, const std::vector<int>& cells) {
  check_field(field, "shift_cells");
  if (static_cast<int>(cells.size()) != field.grid.dimension)
    throw std::invalid_argument("shift_cells: need one offset per axis");
  Field phys = transform(field, Representation::physical);
  Field out = phys;
  const int N = field.grid.points_per_axis;
  const int n = field.grid.dimension;
  std::vector<int> idx(n);
  for (std::int64_t lin = 0; lin < phys.samples.size(); ++lin) {
    unravel_index(field.grid, lin, idx.data());
    std::int64_t src = 0;
    for (int a = 0; a < n; ++a) {
      int s = (idx[a] - cells[a]) % N;
      if (s < 0) s += N;
      src = src * N + s;
    }
    out.samples[lin] = phys.samples[src];
  }
  return transform(out, field.representation);
}

namespace {
void check_same_layout(const Field& a, const Field& b, const char* where) {
  if (!(a.grid == b.grid) || a.representation != b.representation)
    throw std::invalid_argument(std::string(where) +
                                ": fields must share grid and representation");
}
}  // namespace

Field operator+(const Field& a, const Field& b) {
  check_same_layout(a, b, "operator+");
  Field out = a;
  out.samples += b.samples;
  return out;
}

Field operator-(const Field& a, const Field& b) {
  check_same_layout(a, b, "operator-");
  Field out = a;
  out.samples -= b.samples;
  return out;
}

Field operator*(Complex scale, const Field& f) {
  Field out = f;
  out.samples *= scale;
  return out;
}

}  // namespace tsw
