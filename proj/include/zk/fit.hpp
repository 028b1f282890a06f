#pragma once

#include <vector>

namespace zk {

// Least-squares line y = a + b*x with a 95% confidence half-width on b.
struct LineFit {
  double intercept = 0;
  double slope = 0;
  double slope_ci = 0;  // 95% half-width (t-distribution)
  int n = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Log-log power-law fit of positive samples: value ~ C * t^slope.
LineFit fit_loglog(const std::vector<double>& t, const std::vector<double>& value);

std::vector<double> log_spaced(double lo, double hi, int n);

}  // namespace zk
