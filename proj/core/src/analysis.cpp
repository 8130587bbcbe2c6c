#include "wgrover/analysis.hpp"

#include <cmath>
#include <limits>

#include "wgrover/continuum.hpp"
#include "wgrover/errors.hpp"
#include "wgrover/grover.hpp"

namespace wgrover {

ClassicalBounds classical_bounds(const WeightedDatabase& db) {
  ClassicalBounds b{std::numeric_limits<double>::infinity(), 0.0};
  for (const auto& e : db.entries()) {
    const double s = 1.0 / e.proportion;
    b.lo = std::min(b.lo, s);
    b.hi = std::max(b.hi, s);
  }
  return b;
}

GlobalSpeedup global_speedup(const AmplitudeDistribution& dist) {
  GlobalSpeedup g;
  g.min_classical_steps = std::numeric_limits<double>::infinity();
  const auto labels = dist.labels();
  const auto amps = dist.amplitudes();
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double grover = 1.0 / delta_tilde(amps[i]);
    const double classical = 1.0 / std::norm(amps[i]);
    if (grover > g.max_grover_scale) {
      g.max_grover_scale = grover;
      g.grover_witness = labels[i];
    }
    if (classical < g.min_classical_steps) {
      g.min_classical_steps = classical;
      g.classical_witness = labels[i];
    }
  }
  g.holds = g.max_grover_scale < g.min_classical_steps;
  return g;
}

bool local_speedup(Complex p_k) {
  return 1.0 / delta_tilde(p_k) < 1.0 / std::norm(p_k);
}

bool local_speedup(const AmplitudeDistribution& dist, Label k) {
  return local_speedup(dist.amplitude(k));
}

std::vector<ComparisonRow> comparison_table(const AmplitudeDistribution& dist, int r_max) {
  std::vector<ComparisonRow> rows;
  rows.reserve(dist.size());
  for (Label k : dist.labels()) {
    const Complex amp = dist.amplitude(k);
    ComparisonRow row;
    row.k = k;
    row.p_k = std::norm(amp);
    row.recip_classical = row.p_k;
    row.classical_steps = 1.0 / row.p_k;
    row.recip_grover = delta_tilde(amp);
    row.grover_scale = 1.0 / row.recip_grover;
    row.ln_classical = std::log(row.classical_steps);
    row.ln_grover = std::log(row.grover_scale);
    try {
      row.discrete_peak = first_peak(iterate(dist, k, r_max)).r;
    } catch (const NoPeakError&) {
      row.discrete_peak.reset();
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<Label> local_failures(const AmplitudeDistribution& dist) {
  std::vector<Label> out;
  for (Label k : dist.labels()) {
    if (!local_speedup(dist, k)) out.push_back(k);
  }
  return out;
}

}  // namespace wgrover
