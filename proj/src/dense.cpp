#include "tnft/dense.hpp"

#include <cmath>
#include <random>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace tnft {

DenseUnitary dft_matrix(int n) {
  if (n < 1 || n > kDenseMaxQubits)
    throw std::invalid_argument("dft_matrix: n must be in [1, " +
                                std::to_string(kDenseMaxQubits) + "]");
  const std::uint64_t N = std::uint64_t{1} << n;
  const double scale = 1.0 / std::sqrt(double(N));
  DenseUnitary out{n, Mat(N, N)};
  for (std::uint64_t q = 0; q < N; ++q) {
    for (std::uint64_t qp = 0; qp < N; ++qp) {
      // reduce q*q' mod 2^n in integers before the trig call, so the angle
      // stays in [0, 2 pi) with no accumulated phase drift
      const std::uint64_t t = (q * qp) & (N - 1);
      out.m(q, qp) = std::polar(scale, 2.0 * kPi * double(t) / double(N));
    }
  }
  return out;
}

Vec fft(const Vec& v) {
  const std::size_t N = v.size();
  const int n = log2_exact(N);
  Vec a(N);
  for (std::size_t i = 0; i < N; ++i) a(bit_reverse_index(i, n)) = v(i);

  // roots table: e^{+i 2 pi j / N}; table lookups avoid repeated-multiply drift
  std::vector<cx> roots(N / 2 + 1);
  for (std::size_t j = 0; j <= N / 2; ++j)
    roots[j] = std::polar(1.0, 2.0 * kPi * double(j) / double(N));

  for (std::size_t len = 2; len <= N; len <<= 1) {
    const std::size_t stride = N / len;
    for (std::size_t blk = 0; blk < N; blk += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cx w = roots[j * stride];
        const cx t = w * a(blk + j + len / 2);
        const cx u = a(blk + j);
        a(blk + j) = u + t;
        a(blk + j + len / 2) = u - t;
      }
    }
  }
  return a / std::sqrt(double(N));
}

std::uint64_t bit_reverse_index(std::uint64_t x, int n) {
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    r = (r << 1) | (x & 1);
    x >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> bit_reversal_permutation(int n) {
  if (n < 1 || n > 26)
    throw std::invalid_argument("bit_reversal_permutation: n must be in [1, 26]");
  const std::uint64_t N = std::uint64_t{1} << n;
  std::vector<std::uint64_t> p(N);
  for (std::uint64_t i = 0; i < N; ++i) p[i] = bit_reverse_index(i, n);
  return p;
}

Mat permute_rows(const Mat& m, const std::vector<std::uint64_t>& perm) {
  if (std::size_t(m.rows()) != perm.size())
    throw std::invalid_argument("permute_rows: size mismatch");
  Mat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.row(perm[i]) = m.row(i);
  return out;
}

namespace {

void check_finite(const Mat& m) {
  if (!m.allFinite()) throw std::invalid_argument("svd: non-finite entry");
}

int gesdd(char jobz, Mat& a, RVec& s, Mat& u, Mat& vh) {
  const lapack_int rows = lapack_int(a.rows()), cols = lapack_int(a.cols());
  return LAPACKE_zgesdd(LAPACK_COL_MAJOR, jobz, rows, cols, a.data(), rows,
                        s.data(), u.data(), rows ? rows : 1, vh.data(),
                        std::max<lapack_int>(1, std::min(rows, cols)));
}

int gesvd(char job, Mat& a, RVec& s, Mat& u, Mat& vh) {
  const lapack_int rows = lapack_int(a.rows()), cols = lapack_int(a.cols());
  std::vector<double> superb(std::max<lapack_int>(1, std::min(rows, cols)));
  return LAPACKE_zgesvd(LAPACK_COL_MAJOR, job, job, rows, cols, a.data(), rows,
                        s.data(), u.data(), rows ? rows : 1, vh.data(),
                        std::max<lapack_int>(1, std::min(rows, cols)),
                        superb.data());
}

}  // namespace

SvdResult svd(const Mat& m) {
  check_finite(m);
  const Eigen::Index k = std::min(m.rows(), m.cols());
  SvdResult r{Mat(m.rows(), k), RVec(k), Mat(k, m.cols())};
  if (k == 0) return r;
  Mat a = m;
  int info = gesdd('S', a, r.s, r.u, r.vh);
  if (info != 0) {
    a = m;
    info = gesvd('S', a, r.s, r.u, r.vh);
    if (info != 0)
      throw std::runtime_error("svd did not converge (" +
                               std::to_string(info) +
                               " superdiagonals unresolved)");
  }
  return r;
}

RVec singular_values(const Mat& m) {
  check_finite(m);
  const Eigen::Index k = std::min(m.rows(), m.cols());
  RVec s(k);
  if (k == 0) return s;
  Mat a = m;
  Mat dummy(1, 1);
  int info = gesdd('N', a, s, dummy, dummy);
  if (info != 0) {
    a = m;
    info = gesvd('N', a, s, dummy, dummy);
    if (info != 0)
      throw std::runtime_error("svd did not converge (" +
                               std::to_string(info) +
                               " superdiagonals unresolved)");
  }
  return s;
}

SchmidtSpectrum operator_schmidt(const DenseUnitary& u, int j) {
  return operator_schmidt(u.m, u.n, j);
}

SchmidtSpectrum operator_schmidt(const Mat& m, int n, int j) {
  if (j < 1 || j > n - 1)
    throw std::invalid_argument("operator_schmidt: cut must be in [1, n-1]");
  const std::size_t N = std::size_t{1} << n;
  if (std::size_t(m.rows()) != N || std::size_t(m.cols()) != N)
    throw std::invalid_argument("operator_schmidt: dimension mismatch");
  const std::size_t dl = std::size_t{1} << j;        // left block
  const std::size_t dr = std::size_t{1} << (n - j);  // right block
  Mat r(dl * dl, dr * dr);
  for (std::size_t r1 = 0; r1 < dl; ++r1)
    for (std::size_t c1 = 0; c1 < dl; ++c1)
      for (std::size_t r2 = 0; r2 < dr; ++r2)
        for (std::size_t c2 = 0; c2 < dr; ++c2)
          r(r1 * dl + c1, r2 * dr + c2) = m(r1 * dr + r2, c1 * dr + c2);
  RVec s = singular_values(r);
  const double nrm = s.norm();
  SchmidtSpectrum out{n, j, {}};
  out.sigmas.resize(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) out.sigmas[i] = s(i) / nrm;
  return out;
}

double unitary_deviation(const Mat& m) {
  Mat g = m * m.adjoint();
  g -= Mat::Identity(m.rows(), m.cols());
  return g.cwiseAbs().maxCoeff();
}

Vec random_complex_vector(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Vec v(size);
  for (std::size_t i = 0; i < size; ++i) v(i) = cx(nd(rng), nd(rng));
  return v;
}

}  // namespace tnft
