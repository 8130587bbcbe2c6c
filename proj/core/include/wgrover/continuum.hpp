#pragma once

#include <complex>

#include "wgrover/amplitudes.hpp"

namespace wgrover {

// Continuum approximation of the Grover recurrence. Replacing the differences
// a_r - a_{r-1}, b_r - b_{r-1} with derivatives gives
//
//   f_a' = -4|P|^2 f_a - 2 conj(P) f_b,    f_b' = 2 P f_a,
//
// and eliminating f_b,
//
//   f_a'' + 4|P|^2 f_a' + 4|P|^2 f_a = 0.
//
// The characteristic roots are q = (-4|P|^2 +- sqrt(delta)) / 2 with
// delta = 16|P|^4 - 16|P|^2. For 0 < |P| < 1 delta is negative and the
// solution is a damped oscillation with rate -2|P|^2 and angular frequency
// 2*dt, where dt = sqrt(|P|^2 - |P|^4).
//
// For complex P the pair is rotated by conj(P)/|P| so the system becomes
// real; f_b below is always the rotated (real) coefficient.

enum class Branch { overdamped, critical, oscillatory };

struct DiscriminantClass {
  double delta = 0.0;
  Complex q1;
  Complex q2;
  Branch branch = Branch::oscillatory;
};

const char* to_string(Branch b) noexcept;

// sqrt(|P|^2 - |P|^4). Throws DomainError unless 0 < |P| < 1.
double delta_tilde(Complex p_k);

// Full case analysis of the characteristic equation. Throws DomainError if
// |P| > 1.
DiscriminantClass classify(Complex p_k);

// pi / delta_tilde(P): full period of the oscillatory factor.
double period(Complex p_k);

class ContinuumSolution {
public:
  ContinuumSolution(Complex p_k, double c1, double c2);

  Complex p_k() const noexcept { return p_k_; }
  double gamma() const noexcept { return gamma_; }
  double beta() const noexcept { return beta_; }
  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }

  // e^{gamma x} (c1 cos(beta x) + c2 sin(beta x))
  double eval_fa(double x) const noexcept;
  // d/dx of eval_fa.
  double eval_fa_derivative(double x) const noexcept;
  // -(f_a' + 4|P|^2 f_a) / (2|P|)
  double eval_fb(double x) const noexcept;

private:
  Complex p_k_;
  double abs_p_;
  double gamma_;
  double beta_;
  double c1_;
  double c2_;
};

// Matches f_a(0) = fa0 and the derivative implied by the first-order system
// at x = 0. fb0 is the unrotated coefficient; only Re(conj(P) fb0) enters.
ContinuumSolution fit_solution(Complex p_k, double fa0, Complex fb0);

// Initial conditions taken from the first discrete iterate:
// f_a(0) = 1 - 4|P|^2, f_b(0) = 2P.
ContinuumSolution fit_from_first_iterate(Complex p_k);

// Location of the first maximum of f_b on x >= 0, expressed in discrete
// iteration units (x = 0 is iteration r = 1, so the result is x* + 1).
// f_b' = 2|P| f_a, so the maximum sits where f_a crosses zero from above.
double predicted_peak_step(const ContinuumSolution& sol);

}  // namespace wgrover
