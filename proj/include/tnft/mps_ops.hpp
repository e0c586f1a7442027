#pragma once

#include "tnft/chain.hpp"
#include "tnft/dense.hpp"

namespace tnft {

// State chains decode up to 2^26 amplitudes; operator chains contract
// densely up to n = 12.
inline constexpr int kDecodeMaxQubits = 26;
inline constexpr int kMpoDenseMaxQubits = 12;

/// Successive reshape+SVD sweep, left to right. Numerically-zero bond weight
/// (relative squared weight below 1e-30) is always dropped so product
/// vectors come out with unit bonds even at cutoff 0.
Mps vector_to_mps(const Vec& v, const TruncationPolicy& policy,
                  TruncStats* stats = nullptr);

Vec mps_to_vector(const Mps& m);

Mps canonicalize(const Mps& m, Direction dir);
Mpo canonicalize(const Mpo& o, Direction dir);

/// Exact bond spectrum at one cut (no truncation), from a mixed-canonical
/// sweep. For operator chains this matches dense operator_schmidt.
SchmidtSpectrum schmidt_spectrum_at(const Mps& m, int j);
SchmidtSpectrum schmidt_spectrum_at(const Mpo& o, int j);

/// All interior bond spectra from a single canonicalization sweep.
std::vector<SchmidtSpectrum> all_bond_spectra(const Mps& m);
std::vector<SchmidtSpectrum> all_bond_spectra(const Mpo& o);

/// Truncates the single bond j per `policy` (other bonds untouched beyond
/// gauge moves); returns the relative discarded squared weight through
/// `stats`. Equal singular values at the boundary (within 1e-14) are kept
/// together unless max_chi forbids it.
Mps truncate_bond(const Mps& m, int j, const TruncationPolicy& policy,
                  TruncStats* stats = nullptr);
Mpo truncate_bond(const Mpo& o, int j, const TruncationPolicy& policy,
                  TruncStats* stats = nullptr);

/// Full two-sided sweep enforcing `policy` at every bond; right-canonical
/// result.
Mps compress(const Mps& m, const TruncationPolicy& policy,
             TruncStats* stats = nullptr);
Mpo compress(const Mpo& o, const TruncationPolicy& policy,
             TruncStats* stats = nullptr);

/// Reverses site order (bit reversal as a zero-cost relabeling); involution.
Mps reverse_sites(const Mps& m);

Mat mpo_to_dense(const Mpo& o);

/// l2 norm of the represented vector / Frobenius norm of the represented
/// operator, via an isometric sweep (no cancellation).
double norm(const Mps& m);
double norm(const Mpo& o);

cx inner(const Mps& a, const Mps& b);  // <a|b>

/// ca*a + cb*b as a block direct sum (bond dims add).
Mps direct_sum(const Mps& a, const Mps& b, cx ca, cx cb);
Mpo direct_sum(const Mpo& a, const Mpo& b, cx ca, cx cb);

Mpo identity_mpo(int n);

/// Deterministic random state with interior bonds min(chi, 2^i, 2^(n-i)),
/// unit norm.
Mps random_mps(int n, int chi, std::uint64_t seed);

}  // namespace tnft
