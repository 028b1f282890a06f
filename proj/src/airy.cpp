#include "zk/airy.hpp"

#include <cmath>
#include <complex>

#include "zk/types.hpp"

namespace zk {

namespace {

constexpr double kAi0 = 0.35502805388781723926;    // 3^{-2/3} / Gamma(2/3)
constexpr double kAiPrime0 = 0.25881940379280679840;  // 3^{-1/3} / Gamma(1/3)

double ai_series(double z) {
  // Ai = Ai(0) f(z) + Ai'(0) g(z) with the standard ascending series.
  const double z3 = z * z * z;
  double f_term = 1.0, f_sum = 1.0;
  double g_term = z, g_sum = z;
  for (int k = 0; k < 60; ++k) {
    f_term *= z3 / ((3 * k + 2) * (3 * k + 3));
    g_term *= z3 / ((3 * k + 3) * (3 * k + 4));
    f_sum += f_term;
    g_sum += g_term;
    if (std::abs(f_term) < 1e-18 * std::abs(f_sum) &&
        std::abs(g_term) < 1e-18 * (std::abs(g_sum) + 1e-300))
      break;
  }
  return kAi0 * f_sum - kAiPrime0 * g_sum;
}

// 16-point Gauss-Legendre on [-1,1].
constexpr double kGlNodes[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                0.9445750230732326, 0.9894009349916499};
constexpr double kGlWeights[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                  0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                  0.0622535239386479, 0.0271524594117541};

// Rotated contour s = e^{i pi/6} u turns e^{i s^3/3} into e^{-u^3/3}:
// Ai(z) = (1/pi) Re[ e^{i pi/6} int_0^inf e^{i z e^{i pi/6} u} e^{-u^3/3} du ].
double ai_rotated_quadrature(double z) {
  const Complex rot = std::polar(1.0, pi / 6.0);
  const Complex iz_rot = Complex(0, 1) * z * rot;
  const double u_max = 7.0;
  const int panels = 28;
  Complex acc(0, 0);
  for (int p = 0; p < panels; ++p) {
    const double a = u_max * p / panels;
    const double b = u_max * (p + 1) / panels;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Complex panel(0, 0);
    for (int q = 0; q < 8; ++q) {
      for (int sgn = -1; sgn <= 1; sgn += 2) {
        const double u = mid + sgn * half * kGlNodes[q];
        panel += kGlWeights[q] * std::exp(iz_rot * u - u * u * u / 3.0);
      }
    }
    acc += half * panel;
  }
  return (rot * acc).real() / pi;
}

double ai_asymptotic_positive(double z) {
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  double u = 1.0, sum = 1.0, prev = 1.0;
  for (int k = 0; k < 25; ++k) {
    u *= (3 * k + 0.5) * (3 * k + 1.5) * (3 * k + 2.5) / (54.0 * (k + 1) * (k + 0.5));
    const double term = u / std::pow(zeta, k + 1);
    if (std::abs(term) > prev) break;  // divergent tail reached
    sum += ((k + 1) % 2 ? -term : term);
    prev = std::abs(term);
    if (prev < 1e-17) break;
  }
  return std::exp(-zeta) / (2.0 * std::sqrt(pi) * std::pow(z, 0.25)) * sum;
}

double ai_asymptotic_negative(double z) {
  const double x = -z;
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  // Even/odd splits of the u_k sequence against cos/sin(zeta - pi/4).
  double p_sum = 0, q_sum = 0;
  double u = 1.0, prev = 1e300;
  for (int k = 0; k <= 24; ++k) {
    const double term = u / std::pow(zeta, k);
    if (term > prev) break;
    const double signed_term = ((k / 2) % 2 ? -term : term);
    if (k % 2 == 0)
      p_sum += signed_term;
    else
      q_sum += signed_term;
    prev = term;
    u *= (3 * k + 0.5) * (3 * k + 1.5) * (3 * k + 2.5) / (54.0 * (k + 1) * (k + 0.5));
  }
  const double phase = zeta - pi / 4.0;
  return (std::cos(phase) * p_sum + std::sin(phase) * q_sum) /
         (std::sqrt(pi) * std::pow(x, 0.25));
}

}  // namespace

double airy_ai(double z) {
  const double a = std::abs(z);
  if (a <= 2.0) return ai_series(z);
  if (a <= 7.0) return ai_rotated_quadrature(z);
  return z > 0 ? ai_asymptotic_positive(z) : ai_asymptotic_negative(z);
}

}  // namespace zk
