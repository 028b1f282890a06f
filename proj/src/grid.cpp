#include "zk/grid.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace zk {

namespace {

// Unscaled 1D transforms shared by the 2D paths. Eigen's FFT is not
// thread-safe per instance, so each call owns a local one.
void fft_rows(ComplexArray& a, bool forward_dir) {
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  const int nrows = static_cast<int>(a.rows());
  const int ncols = static_cast<int>(a.cols());
  VectorXcd in(ncols), out(ncols);
  for (int i = 0; i < nrows; ++i) {
    for (int j = 0; j < ncols; ++j) in[j] = a(i, j);
    if (forward_dir)
      fft.fwd(out, in);
    else
      fft.inv(out, in);
    for (int j = 0; j < ncols; ++j) a(i, j) = out[j];
  }
}

void fft_cols(ComplexArray& a, bool forward_dir) {
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  const int nrows = static_cast<int>(a.rows());
  const int ncols = static_cast<int>(a.cols());
  VectorXcd in(nrows), out(nrows);
  for (int j = 0; j < ncols; ++j) {
    for (int i = 0; i < nrows; ++i) in[i] = a(i, j);
    if (forward_dir)
      fft.fwd(out, in);
    else
      fft.inv(out, in);
    for (int i = 0; i < nrows; ++i) a(i, j) = out[i];
  }
}

// Box-centered coordinates shift the DFT phase by e^{i pi m} = (-1)^m per axis.
double center_sign(int i, int j) { return ((i + j) & 1) ? -1.0 : 1.0; }

void check_same_grid(const Grid& a, const Grid& b, const char* what) {
  if (!a.same_as(b)) throw GridMismatchError(std::string(what) + ": grids differ");
}

}  // namespace

GridPtr make_grid(int nx, int ny, double lx, double ly, double dealias_fraction) {
  if (nx < 8 || ny < 8 || nx % 2 != 0 || ny % 2 != 0)
    throw std::invalid_argument("make_grid: mode counts must be even and >= 8");
  if (!(lx > 0) || !(ly > 0)) throw std::invalid_argument("make_grid: box lengths must be positive");
  if (!(dealias_fraction > 0) || dealias_fraction > 1.0)
    throw std::invalid_argument("make_grid: dealias_fraction must lie in (0,1]");

  auto g = std::make_shared<Grid>();
  g->nx = nx;
  g->ny = ny;
  g->lx = lx;
  g->ly = ly;
  g->dealias_fraction = dealias_fraction;
  g->kx.resize(nx);
  g->ky.resize(ny);
  g->x1.resize(nx);
  g->x2.resize(ny);
  for (int i = 0; i < nx; ++i) {
    const int m = i < nx / 2 ? i : i - nx;
    g->kx[i] = 2.0 * pi * m / lx;
    g->x1[i] = -lx / 2 + i * lx / nx;
  }
  for (int j = 0; j < ny; ++j) {
    const int m = j < ny / 2 ? j : j - ny;
    g->ky[j] = 2.0 * pi * m / ly;
    g->x2[j] = -ly / 2 + j * ly / ny;
  }
  const double cx = dealias_fraction * g->kx_max();
  const double cy = dealias_fraction * g->ky_max();
  g->keep.resize(nx, ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      g->keep(i, j) = !(std::abs(g->kx[i]) > cx || std::abs(g->ky[j]) > cy);
  return g;
}

RealField make_real_field(GridPtr g) {
  RealField f;
  f.grid = std::move(g);
  f.s = RealArray::Zero(f.grid->nx, f.grid->ny);
  return f;
}

SpectralField make_spectral_field(GridPtr g) {
  SpectralField F;
  F.grid = std::move(g);
  F.c = ComplexArray::Zero(F.grid->nx, F.grid->ny);
  return F;
}

SpectralField forward(const RealField& f) {
  const Grid& g = *f.grid;
  SpectralField F;
  F.grid = f.grid;
  F.c = f.s.cast<Complex>();
  fft_rows(F.c, true);
  fft_cols(F.c, true);
  const double scale = 1.0 / (static_cast<double>(g.nx) * g.ny);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) F.c(i, j) *= scale * center_sign(i, j);
  return F;
}

RealField inverse(const SpectralField& F) {
  const Grid& g = *F.grid;
  const double defect = hermitian_defect(F);
  if (defect > 1e-10)
    std::fprintf(stderr, "zk::inverse: Hermitian symmetry violated (defect %.3e), taking real part\n",
                 defect);
  ComplexArray work = F.c;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) work(i, j) *= center_sign(i, j);
  fft_rows(work, false);
  fft_cols(work, false);
  RealField f;
  f.grid = F.grid;
  f.s = work.real();
  return f;
}

SpectralField apply_multiplier(const FourierMultiplier& m, const SpectralField& F) {
  const Grid& g = *F.grid;
  SpectralField out;
  out.grid = F.grid;
  out.c.resize(g.nx, g.ny);

  if (m.singular) {
    double singular_mass = 0, total_mass = 0;
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.ny; ++j) {
        const double a = std::norm(F.c(i, j));
        total_mass += a;
        if (m.singular(g.kx[i], g.ky[j])) singular_mass += a;
      }
    if (total_mass > 0 && std::sqrt(singular_mass / total_mass) >= 1e-10)
      throw SingularSupportError("apply_multiplier: field carries mass on singular set of '" +
                                 m.name + "' (" + m.singular_desc + ")");
  }
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      if (m.singular && m.singular(g.kx[i], g.ky[j]))
        out.c(i, j) = Complex(0, 0);
      else
        out.c(i, j) = m.symbol(g.kx[i], g.ky[j]) * F.c(i, j);
    }
  return out;
}

SpectralField dealias(const SpectralField& F) {
  const Grid& g = *F.grid;
  SpectralField out;
  out.grid = F.grid;
  out.c.resize(g.nx, g.ny);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) out.c(i, j) = g.keep(i, j) ? F.c(i, j) : Complex(0, 0);
  return out;
}

RealField product(const RealField& f, const RealField& g) {
  check_same_grid(*f.grid, *g.grid, "product");
  RealField h;
  h.grid = f.grid;
  h.s = f.s * g.s;
  return inverse(dealias(forward(h)));
}

double l2_norm(const RealField& f) {
  return std::sqrt(f.grid->cell_area() * f.s.square().sum());
}

double l2_norm(const SpectralField& F) {
  return std::sqrt(F.grid->lx * F.grid->ly * F.c.abs2().sum());
}

double hermitian_defect(const SpectralField& F) {
  const Grid& g = *F.grid;
  double worst = 0, peak = 0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const int ic = i == 0 ? 0 : g.nx - i;
      const int jc = j == 0 ? 0 : g.ny - j;
      worst = std::max(worst, std::abs(F.c(i, j) - std::conj(F.c(ic, jc))));
      peak = std::max(peak, std::abs(F.c(i, j)));
    }
  return peak > 0 ? worst / peak : 0.0;
}

FourierMultiplier derivative_multiplier(int axis) {
  FourierMultiplier m;
  m.name = axis == 0 ? "d/dx1" : "d/dx2";
  m.symbol = [axis](double k1, double k2) {
    return Complex(0, axis == 0 ? k1 : k2);
  };
  return m;
}

FourierMultiplier bessel_multiplier(double s) {
  FourierMultiplier m;
  m.name = "<grad>^" + std::to_string(s);
  m.symbol = [s](double k1, double k2) {
    return Complex(std::pow(1.0 + k1 * k1 + k2 * k2, s / 2), 0);
  };
  return m;
}

namespace {

void put_u32(std::ofstream& os, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ofstream& os, double v) {
  std::uint64_t u;
  std::memcpy(&u, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::ifstream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

double get_f64(std::ifstream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

std::ofstream open_zkf1_writer(const std::string& path, const Grid& g, std::uint8_t tag) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_zkf1: cannot open " + path);
  os.write("ZKF1", 4);
  put_u32(os, static_cast<std::uint32_t>(g.nx));
  put_u32(os, static_cast<std::uint32_t>(g.ny));
  put_f64(os, g.lx);
  put_f64(os, g.ly);
  os.put(static_cast<char>(tag));
  return os;
}

}  // namespace

void write_zkf1(const std::string& path, const RealField& f) {
  auto os = open_zkf1_writer(path, *f.grid, 0);
  for (int i = 0; i < f.grid->nx; ++i)
    for (int j = 0; j < f.grid->ny; ++j) put_f64(os, f.s(i, j));
}

void write_zkf1(const std::string& path, const SpectralField& F) {
  auto os = open_zkf1_writer(path, *F.grid, 1);
  for (int i = 0; i < F.grid->nx; ++i)
    for (int j = 0; j < F.grid->ny; ++j) {
      put_f64(os, F.c(i, j).real());
      put_f64(os, F.c(i, j).imag());
    }
}

Zkf1Contents read_zkf1(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_zkf1: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "ZKF1", 4) != 0)
    throw std::runtime_error("read_zkf1: bad magic in " + path);
  const int nx = static_cast<int>(get_u32(is));
  const int ny = static_cast<int>(get_u32(is));
  const double lx = get_f64(is);
  const double ly = get_f64(is);
  const int tag = is.get();
  Zkf1Contents out;
  out.grid = make_grid(nx, ny, lx, ly);
  if (tag == 0) {
    RealField f = make_real_field(out.grid);
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) f.s(i, j) = get_f64(is);
    out.real = std::move(f);
  } else if (tag == 1) {
    SpectralField F = make_spectral_field(out.grid);
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        const double re = get_f64(is);
        const double im = get_f64(is);
        F.c(i, j) = Complex(re, im);
      }
    out.spectral = std::move(F);
  } else {
    throw std::runtime_error("read_zkf1: unknown domain tag");
  }
  if (!is) throw std::runtime_error("read_zkf1: truncated file " + path);
  return out;
}

}  // namespace zk
