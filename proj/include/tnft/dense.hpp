#pragma once

#include <cstdint>

#include "tnft/types.hpp"

namespace tnft {

// Dense operations are capped at DENSE_MAX_QUBITS; a 2^14 x 2^14 complex
// matrix (4 GiB) is the desk-scale ceiling.
inline constexpr int kDenseMaxQubits = 14;

/// Square complex matrix over a 2^n-dimensional index space, unitary within
/// 1e-12 for every constructor in this module.
struct DenseUnitary {
  int n = 0;
  Mat m;

  std::size_t dim() const { return std::size_t{1} << n; }
};

/// Fourier matrix with entry (q, q') = exp(+i 2 pi q q' / 2^n) / sqrt(2^n).
DenseUnitary dft_matrix(int n);

/// Radix-2 iterative FFT with the same sign and 1/sqrt(N) conventions as
/// dft_matrix. Throws on non-power-of-two length.
Vec fft(const Vec& v);

/// Index with bits q_1..q_n maps to the index with bits q_n..q_1.
std::uint64_t bit_reverse_index(std::uint64_t x, int n);

/// Explicit permutation table for 0..2^n-1 (n <= 26).
std::vector<std::uint64_t> bit_reversal_permutation(int n);

/// Permutation matrix applied to rows: out.row(perm[i]) = in.row(i).
Mat permute_rows(const Mat& m, const std::vector<std::uint64_t>& perm);

struct SvdResult {
  Mat u;    // m x k
  RVec s;   // k, descending, non-negative
  Mat vh;   // k x n
};

/// Thin SVD via LAPACK divide-and-conquer, zgesvd fallback on
/// non-convergence. Reconstruction holds to <= 1e-11 relative Frobenius.
SvdResult svd(const Mat& m);

/// Singular values only (fast path for wide spectra scans).
RVec singular_values(const Mat& m);

/// Singular values of the operator reshaped across the cut after bit j:
/// (row-bits 1..j, col-bits 1..j) x (row-bits j+1..n, col-bits j+1..n),
/// l2-normalized. The sqrt(N) of the operator-to-state mapping is absorbed
/// by the normalization.
SchmidtSpectrum operator_schmidt(const DenseUnitary& u, int j);
SchmidtSpectrum operator_schmidt(const Mat& m, int n, int j);

/// max |U U^dag - I| entry; unitarity diagnostic.
double unitary_deviation(const Mat& m);

/// Deterministic complex gaussian vector (testing / verification input).
Vec random_complex_vector(std::size_t size, std::uint64_t seed);

}  // namespace tnft
