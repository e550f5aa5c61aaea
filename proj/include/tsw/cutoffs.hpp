#pragma once

#include "tsw/field.hpp"

namespace tsw {

// Smooth Littlewood-Paley cutoff family. phi is a C-infinity ramp equal to
// 1 on [0,4], supported on [0,8], monotone in between; the annular pieces
// are the telescoped differences
//   beta_j(s) = phi(2^-j s) - phi(2^-(j-1) s),  j >= 1,
// so that phi + sum_{j<=J} beta_j = phi(2^-J .) holds exactly and the family
// is an exact partition of unity on every grid wavenumber once 2^J is at
// least a quarter of the largest one.
class CutoffFamily {
 public:
  // j_max is the smallest J that closes the partition on this grid.
  explicit CutoffFamily(const GridSpec& grid);

  int j_max() const { return j_max_; }

  // The low-pass symbol phi(|xi|).
  double phi(double s) const;
  // The annular symbol beta_j(|xi|); requires 1 <= j <= j_max.
  double beta(int j, double s) const;

  RadialProfile phi_profile() const;
  RadialProfile beta_profile(int j) const;

 private:
  void check_j(int j) const;
  int j_max_ = 1;
};

// S_j f: the |xi| ~ 2^j Littlewood-Paley piece, beta_j(sqrt(-Laplace)) f.
Field project_lp(const Field& field, int j, const CutoffFamily& cutoffs);

// P_0 f: the low-pass piece phi(sqrt(-Laplace)) f.
Field project_low(const Field& field, const CutoffFamily& cutoffs);

// U_j(t) f with the given sign: beta_j(|xi|) e^{+-i t |xi|} in frequency.
Field localized_evolution(const Field& field, int j, double t, int sign,
                          const CutoffFamily& cutoffs);

}  // namespace tsw
