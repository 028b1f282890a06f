#pragma once

#include <optional>
#include <vector>

#include "zk/fit.hpp"
#include "zk/grid.hpp"

namespace zk {

// omega(k) = k1^3 + k2^3; the free group is coeffs(k) -> e^{i t omega(k)} coeffs(k),
// the sign fixed so that propagate solves d_t w + (d1^3 + d2^3) w = 0.
inline double dispersion_omega(double k1, double k2) { return k1 * k1 * k1 + k2 * k2 * k2; }

SpectralField propagate(const SpectralField& F, double t);

// 1D kernel factor A(t,y) = (2pi)^{-1/2} int e^{i y xi + i t xi^3} dxi
//                         = sqrt(2pi) (3t)^{-1/3} Ai((3t)^{-1/3} y).
double airy_kernel(double t, double y);
// Free-propagator kernel K(t,x1,x2) = (1/2pi) A(t,x1) A(t,x2).
double kernel_2d(double t, double x1, double x2);

struct DecayFit {
  std::vector<double> times;
  std::vector<double> values;
  double slope = 0;
  double slope_ci = 0;
};

// Largest |k| component carrying relative coefficient mass above 1e-13.
double occupied_band(const SpectralField& F);
// Wrap-around deadline: group-speed bound 3*k_hi^2 times t must stay under L/2.
double wrap_safe_tmax(const Grid& g, double k_hi);

// Samples ||weight V(t) f||_{L^p} at log-spaced times and fits the log-log slope.
// p is 0 for the sup norm, else 2.
DecayFit decay_fit(const RealField& f, const std::optional<FourierMultiplier>& weight,
                   double t_lo, double t_hi, int samples, int p = 0);

}  // namespace zk
