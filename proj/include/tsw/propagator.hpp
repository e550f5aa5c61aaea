#pragma once

#include "tsw/cutoffs.hpp"
#include "tsw/spacetime.hpp"

namespace tsw {

// Cauchy data for the wave equation: position f and velocity g on one grid.
struct CauchyData {
  Field f;
  Field g;
};

void validate_cauchy(const CauchyData& data);

// u0(t) = cos(t sqrt(-Lap)) f + (sin(t sqrt(-Lap)) / sqrt(-Lap)) g, evaluated
// spectrally per mode; the |xi| = 0 symbol of the sine kernel is its limit t.
Field free_solution(const CauchyData& data, double t);

// d/dt of the free solution: -sqrt(-Lap) sin(.) f + cos(.) g.
Field free_velocity(const CauchyData& data, double t);

// Retarded integral int_{0<=s<t} sin((t-s)|xi|)/|xi| F(s) ds by composite
// trapezoid over the stored frames; t must land on F's time grid.
Field duhamel(const SpaceTimeField& F, double t);

// S_j u(t) assembled from the one-sided pieces: half-wave evolutions
// e^{+-it|xi|} with annulus-supported weights carrying the exact cos/sin
// splittings and the displayed 2^-j factors.
Field localized_pieces(const CauchyData& data, const SpaceTimeField& F, int j,
                       double t, const CutoffFamily& cutoffs);

// sup over interior times of || -u_tt + Lap u - F ||_2, u_tt by centered
// second differences, Lap spectrally. Needs at least three frames.
double residual_dalembertian(const SpaceTimeField& u, const SpaceTimeField& F);

}  // namespace tsw
