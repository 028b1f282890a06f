#include "zk/bumps.hpp"

#include <cmath>

namespace zk {

double smooth_step(double s) {
  if (s <= 0) return 0.0;
  if (s >= 1) return 1.0;
  const double a = std::exp(-1.0 / s);
  const double b = std::exp(-1.0 / (1.0 - s));
  return a / (a + b);
}

SpectralField gaussian_bump(GridPtr g, double k_center, double sigma, double amplitude) {
  SpectralField F = make_spectral_field(std::move(g));
  const Grid& gr = *F.grid;
  for (int i = 0; i < gr.nx; ++i)
    for (int j = 0; j < gr.ny; ++j) {
      if (!gr.keep(i, j)) continue;
      const double r = std::hypot(gr.kx[i], gr.ky[j]);
      const double d = (r - k_center) / sigma;
      F.c(i, j) = amplitude * std::exp(-0.5 * d * d);
    }
  return F;
}

SpectralField annulus_bump(GridPtr g, double k_lo, double k_hi, double axis_gap,
                           double amplitude) {
  SpectralField F = make_spectral_field(std::move(g));
  const Grid& gr = *F.grid;
  const double ramp = 0.25 * (k_hi - k_lo);
  for (int i = 0; i < gr.nx; ++i)
    for (int j = 0; j < gr.ny; ++j) {
      if (!gr.keep(i, j)) continue;
      const double k1 = gr.kx[i], k2 = gr.ky[j];
      const double r = std::hypot(k1, k2);
      double w = smooth_step((r - k_lo) / ramp) * smooth_step((k_hi - r) / ramp);
      if (axis_gap > 0)
        w *= smooth_step(std::abs(k1) / axis_gap - 1.0) *
             smooth_step(std::abs(k2) / axis_gap - 1.0);
      F.c(i, j) = amplitude * w;
    }
  return F;
}

}  // namespace zk
