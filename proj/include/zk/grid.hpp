#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "zk/types.hpp"

namespace zk {

// Periodic computational box approximating R^2. Immutable after construction.
// Wavenumber lattices are FFT-ordered: storage index i holds mode
// m_i = i for i < n/2, i - n otherwise, with k = 2*pi*m/L (angular wavenumbers).
// Sample coordinates are box-centered: x_i = -L/2 + i*L/n.
struct Grid {
  int nx = 0, ny = 0;
  double lx = 0, ly = 0;
  double dealias_fraction = 2.0 / 3.0;
  VectorXd kx, ky;
  VectorXd x1, x2;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> keep;

  double cell_area() const { return (lx / nx) * (ly / ny); }
  double kx_max() const { return pi * nx / lx; }
  double ky_max() const { return pi * ny / ly; }
  bool same_as(const Grid& o) const {
    return nx == o.nx && ny == o.ny && lx == o.lx && ly == o.ly;
  }
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(int nx, int ny, double lx, double ly, double dealias_fraction = 2.0 / 3.0);

// Scalar field as space samples; s(i, j) = f(x1[i], x2[j]).
struct RealField {
  GridPtr grid;
  RealArray s;
};

// Fourier coefficients of a field: f(x) = sum_k c(k) e^{i k.x} with the
// forward transform carrying the 1/(nx*ny) normalization.
struct SpectralField {
  GridPtr grid;
  ComplexArray c;
};

RealField make_real_field(GridPtr g);
SpectralField make_spectral_field(GridPtr g);

// Pointwise symbol acting on Fourier coefficients. `singular` (optional)
// flags lattice points where the symbol is undefined; `apply_multiplier`
// rejects fields carrying mass there and zeroes those modes exactly.
struct FourierMultiplier {
  std::string name;
  std::function<Complex(double, double)> symbol;
  std::function<bool(double, double)> singular;
  std::string singular_desc;
};

SpectralField forward(const RealField& f);
RealField inverse(const SpectralField& F);

SpectralField apply_multiplier(const FourierMultiplier& m, const SpectralField& F);
SpectralField dealias(const SpectralField& F);
RealField product(const RealField& f, const RealField& g);

double l2_norm(const RealField& f);
double l2_norm(const SpectralField& F);
// Max |c(k) - conj(c(-k))| over the lattice, relative to max |c|.
double hermitian_defect(const SpectralField& F);

FourierMultiplier derivative_multiplier(int axis);         // i*k_axis
FourierMultiplier bessel_multiplier(double s);             // (1+|k|^2)^{s/2}

// ZKF1 field container format (little-endian):
//   'Z','K','F','1', u32 nx, u32 ny, f64 lx, f64 ly, u8 domain_tag, payload.
// domain_tag 0: nx*ny f64 space samples, row-major.
// domain_tag 1: nx*ny (re,im) f64 pairs of spectral coefficients, row-major.
void write_zkf1(const std::string& path, const RealField& f);
void write_zkf1(const std::string& path, const SpectralField& F);

struct Zkf1Contents {
  GridPtr grid;
  std::optional<RealField> real;
  std::optional<SpectralField> spectral;
};
Zkf1Contents read_zkf1(const std::string& path);

}  // namespace zk
