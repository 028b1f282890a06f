#include "zk/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace zk {

namespace {

// Two-sided 95% Student-t quantiles by degrees of freedom; normal limit beyond.
double t_quantile_975(int df) {
  static const double table[] = {12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306,
                                 2.262,  2.228, 2.201, 2.179, 2.160, 2.145, 2.131, 2.120,
                                 2.110,  2.101, 2.093, 2.086, 2.080, 2.074, 2.069, 2.064,
                                 2.060,  2.056, 2.052, 2.048, 2.045, 2.042};
  if (df < 1) return 0.0;
  if (df <= 30) return table[df - 1];
  return 1.96;
}

}  // namespace

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need >= 2 matched samples");
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit f;
  f.n = n;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  if (n > 2) {
    double ss_res = 0;
    for (int i = 0; i < n; ++i) {
      const double r = y[i] - (f.intercept + f.slope * x[i]);
      ss_res += r * r;
    }
    const double se = std::sqrt(ss_res / (n - 2) / sxx);
    f.slope_ci = t_quantile_975(n - 2) * se;
  }
  return f;
}

LineFit fit_loglog(const std::vector<double>& t, const std::vector<double>& value) {
  std::vector<double> lx(t.size()), ly(value.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0) || !(value[i] > 0))
      throw std::invalid_argument("fit_loglog: samples must be positive");
    lx[i] = std::log(t[i]);
    ly[i] = std::log(value[i]);
  }
  return fit_line(lx, ly);
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  if (!(lo > 0) || !(hi > lo) || n < 2) throw std::invalid_argument("log_spaced: bad range");
  std::vector<double> out(n);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * i / (n - 1));
  return out;
}

}  // namespace zk
