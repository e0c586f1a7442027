#include "tnft/mps_ops.hpp"

#include <cmath>
#include <random>

namespace tnft {
namespace detail {

Mat as_lp_r(const SiteTensor& t) {
  return Eigen::Map<const RowMat>(t.a.data(), std::size_t(t.l) * t.p, t.r);
}

Mat as_l_pr(const SiteTensor& t) {
  return Eigen::Map<const RowMat>(t.a.data(), t.l, std::size_t(t.p) * t.r);
}

SiteTensor from_lp_r(const Mat& m, int l, int p) {
  SiteTensor t(l, p, int(m.cols()));
  Eigen::Map<RowMat>(t.a.data(), m.rows(), m.cols()) = m;
  return t;
}

SiteTensor from_l_pr(const Mat& m, int p, int r) {
  SiteTensor t(int(m.rows()), p, r);
  Eigen::Map<RowMat>(t.a.data(), m.rows(), m.cols()) = m;
  return t;
}

std::vector<int> chain_bond_dims(const Chain& c) {
  std::vector<int> b;
  b.reserve(c.size() + 1);
  b.push_back(c.empty() ? 1 : c.front().l);
  for (const auto& t : c) b.push_back(t.r);
  return b;
}

void check_bond_consistency(const Chain& c) {
  if (c.empty()) throw std::invalid_argument("chain: empty");
  if (c.front().l != 1 || c.back().r != 1)
    throw std::invalid_argument("chain: boundary bonds must be 1");
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i].r != c[i + 1].l)
      throw std::invalid_argument("chain: adjacent bond mismatch");
}

int truncation_rank(const RVec& s, const TruncationPolicy& policy,
                    bool drop_zero_weight) {
  policy.validate();
  const int m = int(s.size());
  if (m == 0) return 0;
  double total = 0.0;
  for (int i = 0; i < m; ++i) total += s(i) * s(i);
  if (total == 0.0) return 1;
  double cut_sq = policy.cutoff * policy.cutoff;
  if (drop_zero_weight) cut_sq = std::max(cut_sq, 1e-30);
  // smallest kept rank whose discarded squared weight fits the budget
  int r = m;
  double tail = 0.0;
  while (r > 1) {
    const double next = tail + s(r - 1) * s(r - 1);
    if (next > cut_sq * total) break;
    tail = next;
    --r;
  }
  // degenerate values at the boundary are kept together
  while (r < m && s(r - 1) - s(r) <= 1e-14) ++r;
  if (policy.max_chi) r = std::min(r, *policy.max_chi);
  return std::max(r, 1);
}

void left_qr_sweep(Chain& c) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Mat m = as_lp_r(c[i]);
    const Eigen::Index k = std::min(m.rows(), m.cols());
    Eigen::HouseholderQR<Mat> qr(m);
    Mat q = qr.householderQ() * Mat::Identity(m.rows(), k);
    Mat rr = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    c[i] = from_lp_r(q, c[i].l, c[i].p);
    Mat nxt = rr * as_l_pr(c[i + 1]);
    c[i + 1] = from_l_pr(nxt, c[i + 1].p, c[i + 1].r);
  }
}

void right_lq_sweep(Chain& c) {
  for (std::size_t i = c.size() - 1; i > 0; --i) {
    Mat m = as_l_pr(c[i]).adjoint();  // (p*r, l)
    const Eigen::Index k = std::min(m.rows(), m.cols());
    Eigen::HouseholderQR<Mat> qr(m);
    Mat q = qr.householderQ() * Mat::Identity(m.rows(), k);
    Mat rr = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    c[i] = from_l_pr(q.adjoint(), c[i].p, c[i].r);
    Mat prv = as_lp_r(c[i - 1]) * rr.adjoint();
    c[i - 1] = from_lp_r(prv, c[i - 1].l, c[i - 1].p);
  }
}

void right_svd_sweep(Chain& c, const TruncationPolicy& policy,
                     bool drop_zero_weight, TruncStats* stats,
                     std::vector<RVec>* bond_spectra,
                     std::optional<int> only_bond) {
  const int n = int(c.size());
  if (bond_spectra) bond_spectra->assign(std::size_t(std::max(n - 1, 0)), RVec());
  for (int i = n - 1; i > 0; --i) {
    SvdResult d = svd(as_l_pr(c[i]));
    if (bond_spectra) (*bond_spectra)[i - 1] = d.s;
    const bool apply_here = !only_bond || *only_bond == i;
    static const TruncationPolicy keep_all{};
    const int keep =
        truncation_rank(d.s, apply_here ? policy : keep_all,
                        apply_here ? drop_zero_weight : false);
    if (stats && keep < d.s.size()) {
      double disc = 0.0, total = 0.0;
      for (Eigen::Index k = 0; k < d.s.size(); ++k) {
        const double w = d.s(k) * d.s(k);
        total += w;
        if (k >= keep) disc += w;
      }
      stats->discarded_sq_abs += disc;
      if (total > 0) stats->discarded_sq_rel += disc / total;
    }
    if (stats) stats->chi_max = std::max(stats->chi_max, keep);
    c[i] = from_l_pr(d.vh.topRows(keep), c[i].p, c[i].r);
    Mat carry = d.u.leftCols(keep) * d.s.head(keep).asDiagonal();
    Mat prv = as_lp_r(c[i - 1]) * carry;
    c[i - 1] = from_lp_r(prv, c[i - 1].l, c[i - 1].p);
  }
}

double chain_norm(const Chain& c) {
  Chain tmp = c;
  left_qr_sweep(tmp);
  return as_lp_r(tmp.back()).norm();
}

namespace {

std::vector<SchmidtSpectrum> spectra_of(const Chain& chain, int n) {
  Chain c = chain;
  left_qr_sweep(c);
  std::vector<RVec> raw;
  right_svd_sweep(c, TruncationPolicy{}, false, nullptr, &raw);
  std::vector<SchmidtSpectrum> out;
  out.reserve(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) {
    const double nrm = raw[j].norm();
    SchmidtSpectrum s{n, int(j) + 1, {}};
    s.sigmas.resize(raw[j].size());
    for (Eigen::Index k = 0; k < raw[j].size(); ++k)
      s.sigmas[k] = nrm > 0 ? raw[j](k) / nrm : 0.0;
    out.push_back(std::move(s));
  }
  return out;
}

Chain truncate_bond_impl(const Chain& chain, int j,
                         const TruncationPolicy& policy, TruncStats* stats) {
  if (j < 1 || j > int(chain.size()) - 1)
    throw std::invalid_argument("truncate_bond: cut must be in [1, n-1]");
  Chain c = chain;
  left_qr_sweep(c);
  right_svd_sweep(c, policy, false, stats, nullptr, j);
  return c;
}

Chain compress_impl(const Chain& chain, const TruncationPolicy& policy,
                    TruncStats* stats) {
  Chain c = chain;
  left_qr_sweep(c);
  right_svd_sweep(c, policy, true, stats, nullptr);
  return c;
}

}  // namespace
}  // namespace detail

Mps vector_to_mps(const Vec& v, const TruncationPolicy& policy,
                  TruncStats* stats) {
  policy.validate();
  const int n = log2_exact(std::size_t(v.size()));
  Mps out;
  out.sites.reserve(n);
  RowMat rem = Eigen::Map<const RowMat>(v.data(), 2, v.size() / 2);
  int l = 1;
  for (int i = 0; i < n - 1; ++i) {
    SvdResult d = svd(rem);
    const int keep = detail::truncation_rank(d.s, policy, true);
    if (stats) {
      double disc = 0.0, total = 0.0;
      for (Eigen::Index k = 0; k < d.s.size(); ++k) {
        const double w = d.s(k) * d.s(k);
        total += w;
        if (k >= keep) disc += w;
      }
      stats->discarded_sq_abs += disc;
      if (total > 0) stats->discarded_sq_rel += disc / total;
      stats->chi_max = std::max(stats->chi_max, keep);
    }
    out.sites.push_back(detail::from_lp_r(d.u.leftCols(keep), l, 2));
    RowMat nxt = d.s.head(keep).asDiagonal() * d.vh.topRows(keep);
    l = keep;
    rem = Eigen::Map<const RowMat>(nxt.data(), std::size_t(l) * 2,
                                   nxt.size() / (std::size_t(l) * 2));
  }
  out.sites.push_back(detail::from_lp_r(Mat(rem), l, 2));
  out.canon = {CanonForm::Left, n - 1};
  return out;
}

Vec mps_to_vector(const Mps& m) {
  if (m.n() > kDecodeMaxQubits)
    throw std::invalid_argument("mps_to_vector: n exceeds decode ceiling " +
                                std::to_string(kDecodeMaxQubits));
  RowMat acc = RowMat::Ones(1, 1);
  for (const auto& t : m.sites) {
    RowMat site = Eigen::Map<const RowMat>(t.a.data(), t.l,
                                           std::size_t(t.p) * t.r);
    RowMat nxt = acc * site;  // (2^i, 2*r), reinterpreted as (2^(i+1), r)
    acc = Eigen::Map<const RowMat>(nxt.data(), nxt.rows() * 2, nxt.cols() / 2);
  }
  return Eigen::Map<const Vec>(acc.data(), acc.rows());
}

Mps canonicalize(const Mps& m, Direction dir) {
  Mps out = m;
  if (dir == Direction::Left) {
    detail::left_qr_sweep(out.sites);
    out.canon = {CanonForm::Left, m.n() - 1};
  } else {
    detail::right_lq_sweep(out.sites);
    out.canon = {CanonForm::Right, 0};
  }
  return out;
}

Mpo canonicalize(const Mpo& o, Direction dir) {
  Mpo out = o;
  if (dir == Direction::Left) {
    detail::left_qr_sweep(out.sites);
    out.canon = {CanonForm::Left, o.n() - 1};
  } else {
    detail::right_lq_sweep(out.sites);
    out.canon = {CanonForm::Right, 0};
  }
  return out;
}

SchmidtSpectrum schmidt_spectrum_at(const Mps& m, int j) {
  if (j < 1 || j > m.n() - 1)
    throw std::invalid_argument("schmidt_spectrum_at: cut out of range");
  return detail::spectra_of(m.sites, m.n())[j - 1];
}

SchmidtSpectrum schmidt_spectrum_at(const Mpo& o, int j) {
  if (j < 1 || j > o.n() - 1)
    throw std::invalid_argument("schmidt_spectrum_at: cut out of range");
  return detail::spectra_of(o.sites, o.n())[j - 1];
}

std::vector<SchmidtSpectrum> all_bond_spectra(const Mps& m) {
  return detail::spectra_of(m.sites, m.n());
}

std::vector<SchmidtSpectrum> all_bond_spectra(const Mpo& o) {
  return detail::spectra_of(o.sites, o.n());
}

Mps truncate_bond(const Mps& m, int j, const TruncationPolicy& policy,
                  TruncStats* stats) {
  Mps out;
  out.sites = detail::truncate_bond_impl(m.sites, j, policy, stats);
  out.canon = {CanonForm::Right, 0};
  return out;
}

Mpo truncate_bond(const Mpo& o, int j, const TruncationPolicy& policy,
                  TruncStats* stats) {
  Mpo out;
  out.sites = detail::truncate_bond_impl(o.sites, j, policy, stats);
  out.canon = {CanonForm::Right, 0};
  return out;
}

Mps compress(const Mps& m, const TruncationPolicy& policy, TruncStats* stats) {
  Mps out;
  out.sites = detail::compress_impl(m.sites, policy, stats);
  out.canon = {CanonForm::Right, 0};
  return out;
}

Mpo compress(const Mpo& o, const TruncationPolicy& policy, TruncStats* stats) {
  Mpo out;
  out.sites = detail::compress_impl(o.sites, policy, stats);
  out.canon = {CanonForm::Right, 0};
  return out;
}

Mps reverse_sites(const Mps& m) {
  Mps out;
  out.sites.reserve(m.sites.size());
  for (auto it = m.sites.rbegin(); it != m.sites.rend(); ++it) {
    const SiteTensor& t = *it;
    SiteTensor rv(t.r, t.p, t.l);
    for (int i = 0; i < t.l; ++i)
      for (int s = 0; s < t.p; ++s)
        for (int j = 0; j < t.r; ++j) rv.at(j, s, i) = t.at(i, s, j);
    out.sites.push_back(std::move(rv));
  }
  out.canon.form = m.canon.form == CanonForm::Left    ? CanonForm::Right
                   : m.canon.form == CanonForm::Right ? CanonForm::Left
                                                      : m.canon.form;
  out.canon.center = m.canon.form == CanonForm::MixedAt
                         ? m.n() - m.canon.center
                         : (out.canon.form == CanonForm::Left ? m.n() - 1 : 0);
  return out;
}

Mat mpo_to_dense(const Mpo& o) {
  const int n = o.n();
  if (n > kMpoDenseMaxQubits)
    throw std::invalid_argument("mpo_to_dense: n exceeds dense ceiling " +
                                std::to_string(kMpoDenseMaxQubits));
  RowMat acc = RowMat::Ones(1, 1);
  for (const auto& t : o.sites) {
    RowMat site = Eigen::Map<const RowMat>(t.a.data(), t.l,
                                           std::size_t(t.p) * t.r);
    RowMat nxt = acc * site;
    acc = Eigen::Map<const RowMat>(nxt.data(), nxt.rows() * 4, nxt.cols() / 4);
  }
  // acc rows enumerate interleaved pairs (o_1 i_1 ... o_n i_n)
  const std::size_t N = std::size_t{1} << n;
  Mat out(N, N);
  for (std::size_t idx = 0; idx < N * N; ++idx) {
    std::size_t row = 0, col = 0;
    for (int s = 0; s < n; ++s) {
      const std::size_t pair = (idx >> (2 * (n - 1 - s))) & 3;
      row |= (pair >> 1) << (n - 1 - s);
      col |= (pair & 1) << (n - 1 - s);
    }
    out(row, col) = acc(idx, 0);
  }
  return out;
}

double norm(const Mps& m) { return detail::chain_norm(m.sites); }
double norm(const Mpo& o) { return detail::chain_norm(o.sites); }

cx inner(const Mps& a, const Mps& b) {
  if (a.n() != b.n()) throw std::invalid_argument("inner: site count mismatch");
  Mat env = Mat::Ones(1, 1);
  for (int i = 0; i < a.n(); ++i) {
    const SiteTensor &ta = a.sites[i], &tb = b.sites[i];
    Mat nxt = Mat::Zero(ta.r, tb.r);
    for (int s = 0; s < ta.p; ++s) {
      Mat ma(ta.l, ta.r), mb(tb.l, tb.r);
      for (int x = 0; x < ta.l; ++x)
        for (int y = 0; y < ta.r; ++y) ma(x, y) = ta.at(x, s, y);
      for (int x = 0; x < tb.l; ++x)
        for (int y = 0; y < tb.r; ++y) mb(x, y) = tb.at(x, s, y);
      nxt += ma.adjoint() * env * mb;
    }
    env = std::move(nxt);
  }
  return env(0, 0);
}

namespace {

std::vector<SiteTensor> direct_sum_sites(const std::vector<SiteTensor>& a,
                                         const std::vector<SiteTensor>& b,
                                         cx ca, cx cb) {
  if (a.size() != b.size())
    throw std::invalid_argument("direct_sum: site count mismatch");
  const int n = int(a.size());
  std::vector<SiteTensor> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const SiteTensor &ta = a[i], &tb = b[i];
    if (ta.p != tb.p) throw std::invalid_argument("direct_sum: phys mismatch");
    const cx fa = i == 0 ? ca : cx{1.0};
    const cx fb = i == 0 ? cb : cx{1.0};
    const int l = (i == 0) ? 1 : ta.l + tb.l;
    const int r = (i == n - 1) ? 1 : ta.r + tb.r;
    SiteTensor t(l, ta.p, r);
    for (int s = 0; s < ta.p; ++s) {
      for (int x = 0; x < ta.l; ++x)
        for (int y = 0; y < ta.r; ++y)
          t.at(i == 0 ? 0 : x, s, i == n - 1 ? 0 : y) += fa * ta.at(x, s, y);
      for (int x = 0; x < tb.l; ++x)
        for (int y = 0; y < tb.r; ++y)
          t.at(i == 0 ? 0 : ta.l + x, s, i == n - 1 ? 0 : ta.r + y) +=
              fb * tb.at(x, s, y);
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

Mps direct_sum(const Mps& a, const Mps& b, cx ca, cx cb) {
  Mps out;
  out.sites = direct_sum_sites(a.sites, b.sites, ca, cb);
  return out;
}

Mpo direct_sum(const Mpo& a, const Mpo& b, cx ca, cx cb) {
  Mpo out;
  out.sites = direct_sum_sites(a.sites, b.sites, ca, cb);
  return out;
}

Mpo identity_mpo(int n) {
  if (n < 1) throw std::invalid_argument("identity_mpo: n must be >= 1");
  Mpo o;
  o.sites.reserve(n);
  for (int i = 0; i < n; ++i) {
    SiteTensor t(1, 4, 1);
    t.at(0, 0, 0) = 1.0;  // out=0,in=0
    t.at(0, 3, 0) = 1.0;  // out=1,in=1
    o.sites.push_back(std::move(t));
  }
  return o;
}

Mps random_mps(int n, int chi, std::uint64_t seed) {
  if (n < 1 || chi < 1) throw std::invalid_argument("random_mps: bad shape");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  auto bond = [&](int i) {
    const double cap = std::pow(2.0, std::min(i, n - i));
    return int(std::min<double>(chi, cap));
  };
  Mps m;
  m.sites.reserve(n);
  for (int i = 0; i < n; ++i) {
    SiteTensor t(bond(i), 2, bond(i + 1));
    for (auto& v : t.a) v = cx(nd(rng), nd(rng));
    m.sites.push_back(std::move(t));
  }
  const double nrm = norm(m);
  for (auto& v : m.sites.front().a) v /= nrm;
  return m;
}

}  // namespace tnft
