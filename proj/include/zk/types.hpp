#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace zk {

using Complex = std::complex<double>;

// Row-major so the ZKF1 payload layout samples[i*ny+j] maps straight onto memory.
using RealArray = Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexArray = Eigen::Array<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Eigen::ArrayXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr double pi = 3.141592653589793238462643383279502884;

struct GridMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularSupportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateDenominatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PicardDivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SolverBlowupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// SplitMix64: cheap deterministic stream splitter for seeding sub-generators.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace zk
