#pragma once

#include "tnft/gates.hpp"
#include "tnft/mps_ops.hpp"

namespace tnft {

/// Two-pass zip-up schedule: the left-to-right contraction sweep truncates
/// at `sweep_cutoff_factor * cutoff` (tighter, so the returning sweep
/// dominates the committed error) with `sweep_chi_headroom * max_chi` rank
/// headroom; the right-to-left sweep then enforces the caller's policy.
struct ZipupOptions {
  double sweep_cutoff_factor = 0.1;
  int sweep_chi_headroom = 2;

  TruncationPolicy sweep_policy(const TruncationPolicy& final) const {
    TruncationPolicy p;
    p.cutoff = final.cutoff * sweep_cutoff_factor;
    if (final.max_chi) p.max_chi = *final.max_chi * sweep_chi_headroom;
    return p;
  }
};

/// Single left-to-right zip-up sweep contracting operator/state site pairs
/// with on-the-fly truncation, followed by a right-to-left sweep enforcing
/// `policy`. With cutoff 0 this equals the dense matrix-vector product.
Mps apply_mpo_zipup(const Mpo& o, const Mps& m, const TruncationPolicy& policy,
                    const ZipupOptions& opts = {}, TruncStats* stats = nullptr);

/// Operator product later*first by the same zip-up scheme.
Mpo zipup_multiply(const Mpo& later, const Mpo& first,
                   const TruncationPolicy& policy, const ZipupOptions& opts = {},
                   TruncStats* stats = nullptr);

/// Interior bond spectra of the accumulated operator after one fold.
struct FoldSpectra {
  int fold = 0;
  std::vector<SchmidtSpectrum> spectra;
};

/// Folds an ordered gate list, one staircase run at a time, into an
/// accumulating operator chain, truncating per `policy` after each fold.
/// When `diagnostics` is given, records the bond spectra after every fold.
Mpo zipup_merge_layers(int n, const std::vector<GateLayer>& gates,
                       const TruncationPolicy& policy,
                       const ZipupOptions& opts = {},
                       std::vector<FoldSpectra>* diagnostics = nullptr,
                       TruncStats* stats = nullptr);

}  // namespace tnft
