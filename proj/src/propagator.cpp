#include "zk/propagator.hpp"

#include <cmath>
#include <stdexcept>

#include "zk/airy.hpp"

namespace zk {

SpectralField propagate(const SpectralField& F, double t) {
  const Grid& g = *F.grid;
  SpectralField out;
  out.grid = F.grid;
  out.c.resize(g.nx, g.ny);
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      const double phase = t * dispersion_omega(g.kx[i], g.ky[j]);
      out.c(i, j) = F.c(i, j) * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return out;
}

double airy_kernel(double t, double y) {
  if (!(t > 0)) throw std::invalid_argument("airy_kernel: t must be positive");
  const double scale = std::cbrt(3.0 * t);
  return std::sqrt(2.0 * pi) / scale * airy_ai(y / scale);
}

double kernel_2d(double t, double x1, double x2) {
  if (!(t > 0)) throw std::invalid_argument("kernel_2d: t must be positive");
  return airy_kernel(t, x1) * airy_kernel(t, x2) / (2.0 * pi);
}

double occupied_band(const SpectralField& F) {
  const Grid& g = *F.grid;
  const double peak = F.c.abs().maxCoeff();
  if (peak == 0) return 0;
  double k_hi = 0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      if (std::abs(F.c(i, j)) > 1e-13 * peak)
        k_hi = std::max(k_hi, std::max(std::abs(g.kx[i]), std::abs(g.ky[j])));
  return k_hi;
}

double wrap_safe_tmax(const Grid& g, double k_hi) {
  if (k_hi <= 0) return std::numeric_limits<double>::infinity();
  return 0.5 * std::min(g.lx, g.ly) / (3.0 * k_hi * k_hi);
}

DecayFit decay_fit(const RealField& f, const std::optional<FourierMultiplier>& weight,
                   double t_lo, double t_hi, int samples, int p) {
  const SpectralField F = forward(f);
  const double k_hi = occupied_band(F);
  const double t_wrap = wrap_safe_tmax(*f.grid, k_hi);
  if (t_hi > t_wrap)
    throw std::invalid_argument("decay_fit: window [" + std::to_string(t_lo) + "," +
                                std::to_string(t_hi) + "] exceeds wrap-safe t_max " +
                                std::to_string(t_wrap));
  DecayFit fit;
  fit.times = log_spaced(t_lo, t_hi, samples);
  fit.values.reserve(samples);
  for (double t : fit.times) {
    SpectralField Ft = propagate(F, t);
    if (weight) Ft = apply_multiplier(*weight, Ft);
    const RealField ut = inverse(Ft);
    if (p == 2)
      fit.values.push_back(l2_norm(ut));
    else
      fit.values.push_back(ut.s.abs().maxCoeff());
  }
  const LineFit lf = fit_loglog(fit.times, fit.values);
  fit.slope = lf.slope;
  fit.slope_ci = lf.slope_ci;
  return fit;
}

}  // namespace zk
