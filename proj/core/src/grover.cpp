#include "wgrover/grover.hpp"

#include <cmath>
#include <string>

#include "wgrover/errors.hpp"

namespace wgrover {

namespace {

constexpr double kProbSlack = 1e-9;
constexpr double kUnitTolerance = 1e-9;
constexpr double kSubspaceResidual = 1e-8;

void check_target_amplitude(Complex p_k) {
  const double mag = std::abs(p_k);
  if (!(mag > 0.0)) throw DomainError("target amplitude is zero: label absent from the database");
  if (!(mag < 1.0)) throw DomainError("target amplitude has modulus 1: one-step trivial search");
}

}  // namespace

TwoDState step(const TwoDState& state, Complex p_k) {
  check_target_amplitude(p_k);
  const double p = std::norm(p_k);
  return TwoDState{(1.0 - 4.0 * p) * state.a - 2.0 * std::conj(p_k) * state.b,
                   state.b + 2.0 * p_k * state.a};
}

double success_probability(const TwoDState& state, Complex p_k) {
  const double prob = std::norm(state.a * p_k + state.b);
  if (prob > 1.0 + kProbSlack) {
    throw NumericError("success probability " + std::to_string(prob) + " exceeds 1");
  }
  return prob > 1.0 ? 1.0 : prob;
}

Trajectory iterate(const AmplitudeDistribution& dist, Label k, int r_max) {
  if (r_max < 1) throw DomainError("r_max must be at least 1");
  const Complex p_k = dist.amplitude(k);
  check_target_amplitude(p_k);

  Trajectory traj;
  traj.target = k;
  traj.p_k = p_k;
  traj.points.reserve(static_cast<std::size_t>(r_max) + 1);

  TwoDState s{};
  traj.points.push_back({0, s, success_probability(s, p_k)});
  for (int r = 1; r <= r_max; ++r) {
    s = step(s, p_k);
    traj.points.push_back({r, s, success_probability(s, p_k)});
  }
  return traj;
}

Peak first_peak(const Trajectory& traj) {
  const auto& pts = traj.points;
  if (pts.size() < 3) throw DomainError("first_peak needs at least 3 trajectory points");
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double here = pts[i].success_prob;
    if (here >= pts[i - 1].success_prob && here >= pts[i + 1].success_prob) {
      return Peak{pts[i].r, here};
    }
  }
  throw NoPeakError("no success-probability peak within r_max = " +
                    std::to_string(pts.back().r) + "; increase r_max");
}

StateVector database_state(const AmplitudeDistribution& dist) {
  const auto amps = dist.amplitudes();
  return StateVector(amps.begin(), amps.end());
}

double norm(std::span<const Complex> state) {
  double s = 0.0;
  for (const Complex& c : state) s += std::norm(c);
  return std::sqrt(s);
}

StateVector dense_apply_G(std::span<const Complex> state, const AmplitudeDistribution& dist,
                          Label k) {
  const auto d = dist.amplitudes();
  if (state.size() != d.size()) {
    throw DomainError("state dimension " + std::to_string(state.size()) +
                      " does not match distribution size " + std::to_string(d.size()));
  }
  if (std::abs(norm(state) - 1.0) > kUnitTolerance) {
    throw DomainError("dense state is not normalized");
  }
  const std::size_t ki = dist.index_of(k);

  StateVector out(state.begin(), state.end());
  out[ki] = -out[ki];

  Complex overlap{0.0, 0.0};  // <D|psi>
  for (std::size_t i = 0; i < d.size(); ++i) overlap += std::conj(d[i]) * out[i];
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = 2.0 * overlap * d[i] - out[i];
  return out;
}

TwoDState project_onto_subspace(std::span<const Complex> state,
                                const AmplitudeDistribution& dist, Label k) {
  const auto d = dist.amplitudes();
  if (state.size() != d.size()) {
    throw DomainError("state dimension does not match distribution size");
  }
  const std::size_t ki = dist.index_of(k);
  const Complex p_k = d[ki];
  const double det = 1.0 - std::norm(p_k);
  if (!(det > 0.0)) throw DomainError("|D> and |k> are parallel; Gram matrix is singular");

  Complex d_overlap{0.0, 0.0};  // <D|psi>
  for (std::size_t i = 0; i < d.size(); ++i) d_overlap += std::conj(d[i]) * state[i];
  const Complex k_overlap = state[ki];  // <k|psi>

  // [1, conj(P); P, 1] (a, b)^T = (<D|psi>, <k|psi>)^T
  const TwoDState coeffs{(d_overlap - std::conj(p_k) * k_overlap) / det,
                         (k_overlap - p_k * d_overlap) / det};

  double residual2 = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Complex rebuilt = coeffs.a * d[i];
    if (i == ki) rebuilt += coeffs.b;
    residual2 += std::norm(rebuilt - state[i]);
  }
  if (std::sqrt(residual2) > kSubspaceResidual) {
    throw SubspaceError("state left the 2D subspace span{|D>, |k>} (residual " +
                        std::to_string(std::sqrt(residual2)) + ")");
  }
  return coeffs;
}

}  // namespace wgrover
