#pragma once

#include <optional>
#include <vector>

#include "wgrover/amplitudes.hpp"

namespace wgrover {

// Classical steps to find y_j scale as 1/p_j; the Grover scale is
// 1/delta_tilde(k). Constant factors (pi, the quarter period) are dropped in
// the predicates, as only the order is compared.

struct ClassicalBounds {
  double lo = 0.0;  // min_j 1/p_j
  double hi = 0.0;  // max_j 1/p_j
};

ClassicalBounds classical_bounds(const WeightedDatabase& db);

struct GlobalSpeedup {
  bool holds = false;
  Label grover_witness = 0;     // argmax_k 1/delta_tilde(k)
  double max_grover_scale = 0.0;
  Label classical_witness = 0;  // argmin_j 1/p_j
  double min_classical_steps = 0.0;
};

// max_k 1/delta_tilde(k) < min_j 1/p_j.
GlobalSpeedup global_speedup(const AmplitudeDistribution& dist);

// 1/delta_tilde(k) < 1/|P(k)|^2, evaluated in exactly that form.
bool local_speedup(const AmplitudeDistribution& dist, Label k);
bool local_speedup(Complex p_k);

struct ComparisonRow {
  Label k = 0;
  double p_k = 0.0;
  double classical_steps = 0.0;
  double grover_scale = 0.0;
  // First discrete peak; empty when it lies beyond the iteration budget.
  std::optional<int> discrete_peak;
  double recip_classical = 0.0;
  double recip_grover = 0.0;
  double ln_classical = 0.0;
  double ln_grover = 0.0;
};

inline constexpr int kDefaultRMax = 200;

// One row per label. discrete_peak runs the recurrence for at most r_max
// iterations.
std::vector<ComparisonRow> comparison_table(const AmplitudeDistribution& dist,
                                            int r_max = kDefaultRMax);

// Labels whose row fails the local condition.
std::vector<Label> local_failures(const AmplitudeDistribution& dist);

}  // namespace wgrover
