#pragma once

#include "zk/grid.hpp"

namespace zk {

// C-infinity step: 0 for s <= 0, 1 for s >= 1, smooth in between. Spectral
// windows built from it give superpolynomial spatial decay, which the
// <x>-weighted norms need well inside the box.
double smooth_step(double s);

// Gaussian radial profile exp(-(|k|-k_center)^2 / (2 sigma^2)); k_center = 0
// gives an origin-covering lowpass bump. Real, even in k, hence Hermitian.
SpectralField gaussian_bump(GridPtr g, double k_center, double sigma, double amplitude);

// Smoothly windowed annulus k_lo <= |k| <= k_hi with both |k1|,|k2| >= axis_gap
// ramped to zero below 2*axis_gap. Suitable for the certified final-data class.
SpectralField annulus_bump(GridPtr g, double k_lo, double k_hi, double axis_gap,
                           double amplitude);

}  // namespace zk
