#include "wgrover/continuum.hpp"

#include <cmath>
#include <numbers>

#include "wgrover/errors.hpp"

namespace wgrover {

namespace {

void check_nondegenerate(Complex p_k) {
  const double mag = std::abs(p_k);
  if (!(mag > 0.0) || !(mag < 1.0)) {
    throw DomainError("continuum solution requires 0 < |P(k)| < 1");
  }
}

}  // namespace

const char* to_string(Branch b) noexcept {
  switch (b) {
    case Branch::overdamped:
      return "overdamped";
    case Branch::critical:
      return "critical";
    case Branch::oscillatory:
      return "oscillatory";
  }
  return "unknown";
}

double delta_tilde(Complex p_k) {
  check_nondegenerate(p_k);
  const double p = std::norm(p_k);
  return std::sqrt(p - p * p);
}

DiscriminantClass classify(Complex p_k) {
  const double p = std::norm(p_k);
  if (p > 1.0) throw DomainError("|P(k)| > 1 is not a valid amplitude");
  DiscriminantClass out;
  out.delta = 16.0 * p * p - 16.0 * p;
  const Complex root = std::sqrt(Complex{out.delta, 0.0});
  out.q1 = (-4.0 * p + root) / 2.0;
  out.q2 = (-4.0 * p - root) / 2.0;
  if (out.delta < 0.0) {
    out.branch = Branch::oscillatory;
  } else if (out.delta == 0.0) {
    out.branch = Branch::critical;
  } else {
    out.branch = Branch::overdamped;
  }
  return out;
}

double period(Complex p_k) { return std::numbers::pi / delta_tilde(p_k); }

ContinuumSolution::ContinuumSolution(Complex p_k, double c1, double c2)
    : p_k_(p_k),
      abs_p_(std::abs(p_k)),
      gamma_(-2.0 * std::norm(p_k)),
      beta_(2.0 * delta_tilde(p_k)),
      c1_(c1),
      c2_(c2) {}

double ContinuumSolution::eval_fa(double x) const noexcept {
  return std::exp(gamma_ * x) * (c1_ * std::cos(beta_ * x) + c2_ * std::sin(beta_ * x));
}

double ContinuumSolution::eval_fa_derivative(double x) const noexcept {
  const double c = std::cos(beta_ * x);
  const double s = std::sin(beta_ * x);
  return std::exp(gamma_ * x) *
         ((gamma_ * c1_ + beta_ * c2_) * c + (gamma_ * c2_ - beta_ * c1_) * s);
}

double ContinuumSolution::eval_fb(double x) const noexcept {
  // Collapsed form of -(f_a' + 4|P|^2 f_a) / (2|P|) with gamma = -2|P|^2.
  const double p = abs_p_ * abs_p_;
  const double c = std::cos(beta_ * x);
  const double s = std::sin(beta_ * x);
  const double inner = (2.0 * p * c1_ + beta_ * c2_) * c + (2.0 * p * c2_ - beta_ * c1_) * s;
  return -std::exp(gamma_ * x) * inner / (2.0 * abs_p_);
}

ContinuumSolution fit_solution(Complex p_k, double fa0, Complex fb0) {
  check_nondegenerate(p_k);
  const double p = std::norm(p_k);
  const double slope0 = -4.0 * fa0 * p - 2.0 * (std::conj(p_k) * fb0).real();
  const double c2 = (slope0 + 2.0 * p * fa0) / (2.0 * delta_tilde(p_k));
  return ContinuumSolution(p_k, fa0, c2);
}

ContinuumSolution fit_from_first_iterate(Complex p_k) {
  return fit_solution(p_k, 1.0 - 4.0 * std::norm(p_k), 2.0 * p_k);
}

double predicted_peak_step(const ContinuumSolution& sol) {
  if (sol.c1() == 0.0 && sol.c2() == 0.0) {
    throw DomainError("continuum solution is identically zero; no peak to predict");
  }
  // c1 cos(phi) + c2 sin(phi) = R cos(phi - psi) decreases through zero at
  // phi = psi + pi/2 (mod 2 pi).
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double psi = std::atan2(sol.c2(), sol.c1());
  double phi = std::fmod(psi + std::numbers::pi / 2.0, two_pi);
  if (phi < 0.0) phi += two_pi;
  return phi / sol.beta() + 1.0;
}

}  // namespace wgrover
