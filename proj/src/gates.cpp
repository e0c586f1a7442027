#include "tnft/gates.hpp"

#include <cmath>

namespace tnft {

void validate_gate(const GateLayer& g, int n) {
  if (g.kind == GateLayer::Kind::Hadamard) {
    if (g.site < 1 || g.site > n)
      throw std::invalid_argument("gate: hadamard site out of range");
    return;
  }
  if (g.control < 1 || g.control > n || g.target < 1 || g.target > n)
    throw std::invalid_argument("gate: controlled-phase site out of range");
  if (g.control == g.target)
    throw std::invalid_argument("gate: control equals target");
  if (g.k < 2) throw std::invalid_argument("gate: phase index k must be >= 2");
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

SiteTensor identity_site() {
  SiteTensor t(1, 4, 1);
  t.at(0, 0, 0) = 1.0;
  t.at(0, 3, 0) = 1.0;
  return t;
}

SiteTensor pass_through_site(int bond) {
  SiteTensor t(bond, 4, bond);
  for (int b = 0; b < bond; ++b) {
    t.at(b, 0, b) = 1.0;
    t.at(b, 3, b) = 1.0;
  }
  return t;
}

// Diagonal phase site: multiplies by exp(i * angle * b * q) where b is the
// bond value carried from the control and q the local bit.
SiteTensor phase_site(double angle, bool close_right) {
  SiteTensor t(2, 4, close_right ? 1 : 2);
  for (int b = 0; b < 2; ++b) {
    const int rb = close_right ? 0 : b;
    t.at(b, 0, rb) = 1.0;
    t.at(b, 3, rb) = b ? std::polar(1.0, angle) : cx{1.0};
  }
  return t;
}

}  // namespace

Mpo gate_run_to_mpo(int n, const std::vector<GateLayer>& run) {
  if (run.empty()) throw std::invalid_argument("gate run: empty");
  for (const auto& g : run) validate_gate(g, n);

  Mpo o;
  o.sites.assign(n, SiteTensor());

  const GateLayer& head = run.front();
  if (head.kind == GateLayer::Kind::Hadamard) {
    const int start = head.site;
    // targets of the controlled phases following the Hadamard, all sharing
    // control = start and strictly increasing
    std::vector<std::pair<int, double>> targets;
    int prev = start;
    for (std::size_t i = 1; i < run.size(); ++i) {
      const GateLayer& g = run[i];
      if (g.kind != GateLayer::Kind::ControlledPhase || g.control != start ||
          g.target <= prev)
        throw std::invalid_argument("gate run: malformed staircase run");
      targets.emplace_back(g.target, g.angle());
      prev = g.target;
    }
    const int last = targets.empty() ? start : targets.back().first;
    for (int s = 1; s <= n; ++s) {
      SiteTensor t;
      if (s < start || s > last) {
        t = identity_site();
      } else if (s == start) {
        // Hadamard whose output bit rides the bond toward the targets
        const int rb = (s == last) ? 1 : 2;
        t = SiteTensor(1, 4, rb);
        for (int out = 0; out < 2; ++out)
          for (int in = 0; in < 2; ++in)
            t.at(0, out * 2 + in, (rb == 2) ? out : 0) =
                kInvSqrt2 * ((out && in) ? -1.0 : 1.0);
      } else {
        auto it = std::find_if(targets.begin(), targets.end(),
                               [s](const auto& p) { return p.first == s; });
        if (it == targets.end())
          t = pass_through_site(2);
        else
          t = phase_site(it->second, s == last);
      }
      o.sites[s - 1] = std::move(t);
    }
    return o;
  }

  // lone controlled phase
  if (run.size() != 1)
    throw std::invalid_argument("gate run: malformed staircase run");
  int c = head.control, tgt = head.target;
  if (c > tgt) std::swap(c, tgt);  // the gate is symmetric
  const double angle = head.angle();
  for (int s = 1; s <= n; ++s) {
    SiteTensor t;
    if (s < c || s > tgt) {
      t = identity_site();
    } else if (s == c) {
      t = SiteTensor(1, 4, 2);
      t.at(0, 0, 0) = 1.0;  // bond carries the control bit
      t.at(0, 3, 1) = 1.0;
    } else if (s == tgt) {
      t = phase_site(angle, true);
    } else {
      t = pass_through_site(2);
    }
    o.sites[s - 1] = std::move(t);
  }
  return o;
}

std::vector<std::vector<GateLayer>> group_gate_runs(
    const std::vector<GateLayer>& gates, int n) {
  std::vector<std::vector<GateLayer>> runs;
  for (std::size_t i = 0; i < gates.size();) {
    validate_gate(gates[i], n);
    std::vector<GateLayer> run{gates[i]};
    if (gates[i].kind == GateLayer::Kind::Hadamard) {
      const int c = gates[i].site;
      int prev = c;
      std::size_t j = i + 1;
      while (j < gates.size() &&
             gates[j].kind == GateLayer::Kind::ControlledPhase &&
             gates[j].control == c && gates[j].target > prev) {
        prev = gates[j].target;
        run.push_back(gates[j]);
        ++j;
      }
      i = j;
    } else {
      ++i;
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

Mat gate_to_dense(const GateLayer& g, int n) {
  if (n > kMpoDenseMaxQubits)
    throw std::invalid_argument("gate_to_dense: n exceeds dense ceiling");
  validate_gate(g, n);
  const std::size_t N = std::size_t{1} << n;
  Mat m = Mat::Zero(N, N);
  if (g.kind == GateLayer::Kind::Hadamard) {
    const std::size_t mask = std::size_t{1} << (n - g.site);
    for (std::size_t q = 0; q < N; ++q) {
      const int bit = (q & mask) ? 1 : 0;
      m(q & ~mask, q) += kInvSqrt2;
      m(q | mask, q) += kInvSqrt2 * (bit ? -1.0 : 1.0);
    }
  } else {
    const std::size_t mc = std::size_t{1} << (n - g.control);
    const std::size_t mt = std::size_t{1} << (n - g.target);
    for (std::size_t q = 0; q < N; ++q)
      m(q, q) = ((q & mc) && (q & mt)) ? std::polar(1.0, g.angle()) : cx{1.0};
  }
  return m;
}

}  // namespace tnft
