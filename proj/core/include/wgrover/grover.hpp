#pragma once

#include <complex>
#include <span>
#include <vector>

#include "wgrover/amplitudes.hpp"

namespace wgrover {

// Coefficients of G^r|D> = a|D> + b|k>. |D> and |k> are not orthogonal, so
// the measured target amplitude is a*P(k) + b rather than b.
struct TwoDState {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
};

struct TrajectoryPoint {
  int r = 0;
  TwoDState state;
  double success_prob = 0.0;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  Label target = 0;
  Complex p_k;
};

struct Peak {
  int r = 0;
  double prob = 0.0;
};

// One Grover iteration G = U_D U_k on the coefficient pair:
//   a' = (1 - 4|P|^2) a - 2 conj(P) b
//   b' = b + 2 P a
// Throws DomainError unless 0 < |P_k| < 1.
TwoDState step(const TwoDState& state, Complex p_k);

// |a P_k + b|^2, snapped into [0, 1] when within 1e-9 of either end.
// Throws NumericError if the value exceeds 1 + 1e-9.
double success_probability(const TwoDState& state, Complex p_k);

// r_max + 1 points, r = 0 .. r_max, starting from (a, b) = (1, 0).
Trajectory iterate(const AmplitudeDistribution& dist, Label k, int r_max);

// Smallest r >= 1 whose success probability is a local maximum over its
// neighbours (ties resolve to the smaller r). Throws NoPeakError when the
// trajectory is monotone up to its last point.
Peak first_peak(const Trajectory& traj);

using StateVector = std::vector<Complex>;

// Dense |D> in the distribution's label order.
StateVector database_state(const AmplitudeDistribution& dist);

// U_D U_k applied matrix-free: flip the target component, then reflect about
// |D> with a single inner product. The input must be a unit vector
// (within 1e-9) of the distribution's dimension.
StateVector dense_apply_G(std::span<const Complex> state, const AmplitudeDistribution& dist,
                          Label k);

// Recovers (a, b) with a|D> + b|k> = state by solving the 2x2 Gram system of
// the non-orthogonal pair. Throws SubspaceError when the reconstruction
// residual exceeds 1e-8.
TwoDState project_onto_subspace(std::span<const Complex> state,
                                const AmplitudeDistribution& dist, Label k);

// Euclidean norm of a dense state.
double norm(std::span<const Complex> state);

}  // namespace wgrover
