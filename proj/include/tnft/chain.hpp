#pragma once

#include <optional>

#include "tnft/types.hpp"

namespace tnft {

/// Relative truncation policy for bond spectra: the discarded squared weight
/// at a bond is kept <= cutoff^2 of the total squared weight, so `cutoff`
/// bounds the relative l2 error contributed by that bond. `max_chi` is a
/// hard cap on the kept rank.
struct TruncationPolicy {
  double cutoff = 0.0;
  std::optional<int> max_chi;

  void validate() const {
    if (!(cutoff >= 0.0 && cutoff < 1.0))
      throw std::invalid_argument("TruncationPolicy: cutoff must be in [0, 1)");
    if (max_chi && *max_chi < 1)
      throw std::invalid_argument("TruncationPolicy: max_chi must be >= 1");
  }
};

/// Accumulated truncation bookkeeping. `discarded_sq_abs` is the exact drop
/// in squared norm of the represented object; `discarded_sq_rel` accumulates
/// per-bond relative discarded weights.
struct TruncStats {
  double discarded_sq_abs = 0.0;
  double discarded_sq_rel = 0.0;
  int chi_max = 1;
};

enum class CanonForm { None, Left, Right, MixedAt };

struct CanonFlag {
  CanonForm form = CanonForm::None;
  int center = 0;  // meaningful for MixedAt (bond index) only
};

/// Rank-3 chain tensor, row-major (left, phys, right). Operator chains fuse
/// the two physical legs as phys = out*2 + in.
struct SiteTensor {
  int l = 1, p = 2, r = 1;
  std::vector<cx> a;

  SiteTensor() = default;
  SiteTensor(int l_, int p_, int r_)
      : l(l_), p(p_), r(r_), a(std::size_t(l_) * p_ * r_, cx{}) {}

  cx& at(int i, int s, int j) { return a[(std::size_t(i) * p + s) * r + j]; }
  const cx& at(int i, int s, int j) const {
    return a[(std::size_t(i) * p + s) * r + j];
  }
};

namespace detail {
using Chain = std::vector<SiteTensor>;

Mat as_lp_r(const SiteTensor& t);  // (l*p, r)
Mat as_l_pr(const SiteTensor& t);  // (l, p*r)
SiteTensor from_lp_r(const Mat& m, int l, int p);
SiteTensor from_l_pr(const Mat& m, int p, int r);

int truncation_rank(const RVec& s, const TruncationPolicy& policy,
                    bool drop_zero_weight);
void left_qr_sweep(Chain& c);
// Right-to-left SVD sweep over a left-canonical chain; truncates each bond
// per `policy`, optionally records the (pre-truncation) spectrum at every
// bond. Leaves the chain right-canonical.
void right_svd_sweep(Chain& c, const TruncationPolicy& policy,
                     bool drop_zero_weight, TruncStats* stats,
                     std::vector<RVec>* bond_spectra,
                     std::optional<int> only_bond = std::nullopt);
double chain_norm(const Chain& c);
std::vector<int> chain_bond_dims(const Chain& c);
void check_bond_consistency(const Chain& c);
Chain compress_chain(const Chain& c, const TruncationPolicy& policy,
                     TruncStats* stats);
}  // namespace detail

/// Chain of n rank-3 tensors encoding a length-2^n vector; site 1 carries
/// the most significant bit.
struct Mps {
  std::vector<SiteTensor> sites;
  CanonFlag canon;

  int n() const { return int(sites.size()); }
  std::vector<int> bond_dims() const { return detail::chain_bond_dims(sites); }
  int max_bond() const {
    int m = 1;
    for (int b : bond_dims()) m = std::max(m, b);
    return m;
  }
};

/// Chain of n rank-4 tensors encoding a 2^n x 2^n operator; physical legs
/// are stored fused as phys = out*2 + in.
struct Mpo {
  std::vector<SiteTensor> sites;
  CanonFlag canon;

  int n() const { return int(sites.size()); }
  std::vector<int> bond_dims() const { return detail::chain_bond_dims(sites); }
  int max_bond() const {
    int m = 1;
    for (int b : bond_dims()) m = std::max(m, b);
    return m;
  }

  cx& at(int site, int li, int out, int in, int ri) {
    return sites[site].at(li, out * 2 + in, ri);
  }
  const cx& at(int site, int li, int out, int in, int ri) const {
    return sites[site].at(li, out * 2 + in, ri);
  }
};

enum class Direction { Left, Right };

}  // namespace tnft
