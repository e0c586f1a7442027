#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

// Conventions used throughout the library (all modules follow these):
//
//  * Bit ordering: bit 1 is the most significant bit of an index, so an
//    n-bit index q = q_1 q_2 ... q_n has value sum_i q_i 2^(n-i), and the
//    binary fraction 0.q_1...q_n equals q / 2^n. Site 1 of a tensor chain
//    carries bit 1.
//  * Fourier sign and scale: entry (q, q') of the transform matrix is
//    exp(+i 2 pi q q' / 2^n) / sqrt(2^n).
//  * Chain tensor index order: (left bond, physical, right bond) for state
//    chains, (left bond, phys-out, phys-in, right bond) for operator
//    chains; storage is row-major in that order. Boundary bonds are 1.
//  * Operator entry (row, col): row collects the "out" bits, col the "in"
//    bits, both in bit-1-major order.

namespace tnft {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RowMat = Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Descending, l2-normalized singular values at one bipartition cut.
struct SchmidtSpectrum {
  int n = 0;          // system size (sites)
  int cut = 0;        // bipartition after site `cut`, 1 <= cut <= n-1
  std::vector<double> sigmas;

  double sum_sq() const {
    double s = 0;
    for (double v : sigmas) s += v * v;
    return s;
  }
};

inline bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

inline int log2_exact(std::size_t x) {
  if (!is_power_of_two(x)) throw std::invalid_argument("length must be a power of two");
  int n = 0;
  while ((std::size_t{1} << n) < x) ++n;
  return n;
}

}  // namespace tnft
