#pragma once

#include "tnft/chain.hpp"

namespace tnft {

/// One gate of the staircase circuit: a Hadamard, or a controlled phase
/// with angle 2 pi / 2^k between a control and a later target.
struct GateLayer {
  enum class Kind { Hadamard, ControlledPhase };
  Kind kind = Kind::Hadamard;
  int site = 0;     // Hadamard site
  int control = 0;  // ControlledPhase only
  int target = 0;
  int k = 0;        // phase angle is 2 pi / 2^k, k >= 2 in a staircase

  static GateLayer hadamard(int site) {
    return {Kind::Hadamard, site, 0, 0, 0};
  }
  static GateLayer controlled_phase(int control, int target, int k) {
    return {Kind::ControlledPhase, 0, control, target, k};
  }

  double angle() const { return 2.0 * kPi / std::pow(2.0, k); }
};

void validate_gate(const GateLayer& g, int n);

/// Exact chain form of a maximal run of gates sharing one start site: either
/// a lone gate, or a Hadamard followed by controlled phases it controls.
/// Bond dimension is at most 2. Throws on anything else (malformed layer).
Mpo gate_run_to_mpo(int n, const std::vector<GateLayer>& run);

/// Splits an ordered gate list into the maximal runs gate_run_to_mpo accepts.
std::vector<std::vector<GateLayer>> group_gate_runs(
    const std::vector<GateLayer>& gates, int n);

/// Dense matrix of one gate acting on n sites (verification bridge, n <= 12).
Mat gate_to_dense(const GateLayer& g, int n);

}  // namespace tnft
