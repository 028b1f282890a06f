#pragma once

namespace zk {

// Classical Airy function Ai(z) = (1/2pi) int e^{i(z s + s^3/3)} ds, real z.
// Maclaurin series for |z| <= 2, contour-rotated quadrature for moderate |z|,
// asymptotic expansions beyond; absolute accuracy ~1e-12 for |z| <= 20.
double airy_ai(double z);

}  // namespace zk
