#include "tnft/zipup.hpp"

namespace tnft {
namespace {

// Shared zip-up sweep. The "op" chain has fused physical (out, mid); the
// "state" chain has physical (mid[, in]) of dimension state_p. The result
// chain has physical dimension out_p * (state_p / 2).
std::vector<SiteTensor> zip_sweep(const std::vector<SiteTensor>& op,
                                  const std::vector<SiteTensor>& state,
                                  const TruncationPolicy& sweep_policy,
                                  TruncStats* stats) {
  const int n = int(op.size());
  const int keep_p = state[0].p / 2;  // spectator part of the state leg
  const int out_p = 2 * keep_p;
  std::vector<SiteTensor> out;
  out.reserve(n);

  Mat carry = Mat::Ones(1, 1);  // (t, w*m)
  for (int i = 0; i < n; ++i) {
    const SiteTensor& w = op[i];
    const SiteTensor& s = state[i];
    const int wl = w.l, wr = w.r, ml = s.l, mr = s.r;

    // K[(wl,ml), (o, spectator, wr, mr)] = sum_mid W[wl,(o,mid),wr] * S[ml,(mid,spec),mr]
    Mat k = Mat::Zero(std::size_t(wl) * ml, std::size_t(out_p) * wr * mr);
    for (int a = 0; a < wl; ++a)
      for (int b = 0; b < ml; ++b)
        for (int o = 0; o < 2; ++o)
          for (int sp = 0; sp < keep_p; ++sp)
            for (int c = 0; c < wr; ++c)
              for (int d = 0; d < mr; ++d) {
                cx acc = 0.0;
                for (int mid = 0; mid < 2; ++mid)
                  acc += w.at(a, o * 2 + mid, c) * s.at(b, mid * keep_p + sp, d);
                k(std::size_t(a) * ml + b,
                  (std::size_t(o) * keep_p + sp) * wr * mr +
                      std::size_t(c) * mr + d) = acc;
              }

    RowMat y = carry * k;  // (t, out_p*wr*mr)
    Eigen::Map<const RowMat> y2(y.data(), y.rows() * out_p,
                                std::size_t(wr) * mr);
    if (i == n - 1) {
      out.push_back(detail::from_lp_r(Mat(y2), int(y.rows()), out_p));
      break;
    }
    SvdResult d = svd(Mat(y2));
    const int keep = detail::truncation_rank(d.s, sweep_policy, true);
    if (stats) {
      double disc = 0.0, total = 0.0;
      for (Eigen::Index q = 0; q < d.s.size(); ++q) {
        const double wq = d.s(q) * d.s(q);
        total += wq;
        if (q >= keep) disc += wq;
      }
      stats->discarded_sq_abs += disc;
      if (total > 0) stats->discarded_sq_rel += disc / total;
      stats->chi_max = std::max(stats->chi_max, keep);
    }
    out.push_back(detail::from_lp_r(d.u.leftCols(keep), int(y.rows()), out_p));
    carry = d.s.head(keep).asDiagonal() * d.vh.topRows(keep);
  }
  return out;
}

}  // namespace

Mps apply_mpo_zipup(const Mpo& o, const Mps& m, const TruncationPolicy& policy,
                    const ZipupOptions& opts, TruncStats* stats) {
  if (o.n() != m.n())
    throw std::invalid_argument("apply_mpo_zipup: site count mismatch");
  policy.validate();
  Mps out;
  out.sites = zip_sweep(o.sites, m.sites, opts.sweep_policy(policy), stats);
  out.sites = detail::compress_impl_public(out.sites, policy, stats);
  out.canon = {CanonForm::Right, 0};
  return out;
}

Mpo zipup_multiply(const Mpo& later, const Mpo& first,
                   const TruncationPolicy& policy, const ZipupOptions& opts,
                   TruncStats* stats) {
  if (later.n() != first.n())
    throw std::invalid_argument("zipup_multiply: site count mismatch");
  policy.validate();
  Mpo out;
  out.sites = zip_sweep(later.sites, first.sites, opts.sweep_policy(policy), stats);
  out.sites = detail::compress_impl_public(out.sites, policy, stats);
  out.canon = {CanonForm::Right, 0};
  return out;
}

Mpo zipup_merge_layers(int n, const std::vector<GateLayer>& gates,
                       const TruncationPolicy& policy, const ZipupOptions& opts,
                       std::vector<FoldSpectra>* diagnostics,
                       TruncStats* stats) {
  if (gates.empty()) return identity_mpo(n);
  auto runs = group_gate_runs(gates, n);
  Mpo acc = gate_run_to_mpo(n, runs.front());
  if (diagnostics) diagnostics->push_back({0, all_bond_spectra(acc)});
  for (std::size_t f = 1; f < runs.size(); ++f) {
    Mpo layer = gate_run_to_mpo(n, runs[f]);
    acc = zipup_multiply(layer, acc, policy, opts, stats);
    if (diagnostics) diagnostics->push_back({int(f), all_bond_spectra(acc)});
  }
  return acc;
}

}  // namespace tnft
