#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace wgrover {

using Complex = std::complex<double>;

// Basis label. For coherent-state databases this is the photon number.
using Label = long;

// Normalization tolerance shared by every constructor.
inline constexpr double kNormTolerance = 1e-12;

class WeightedDatabase;

// Complex amplitudes P(n) over strictly increasing labels, normalized so that
// sum |P(n)|^2 = 1. Immutable once constructed.
class AmplitudeDistribution {
public:
  // Arbitrary complex amplitudes. Throws DomainError when fewer than two
  // entries are given, the sizes differ, labels are not strictly increasing,
  // or the squared norm deviates from 1 by more than kNormTolerance.
  AmplitudeDistribution(std::vector<Label> labels, std::vector<Complex> amplitudes);

  std::size_t size() const noexcept { return amplitudes_.size(); }
  std::span<const Label> labels() const noexcept { return labels_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

  bool contains(Label k) const noexcept;
  // Position of label k in the ordered sequence; throws LookupError.
  std::size_t index_of(Label k) const;
  Complex amplitude(Label k) const { return amplitudes_[index_of(k)]; }
  // |P(k)|^2
  double proportion(Label k) const;

  // Classical view: (label, |P(n)|^2) pairs.
  WeightedDatabase to_database() const;

private:
  std::vector<Label> labels_;
  std::vector<Complex> amplitudes_;
};

// Classical database {(y_j, p_j)}: strictly positive proportions summing to 1.
class WeightedDatabase {
public:
  struct Entry {
    Label label;
    double proportion;
  };

  // Throws DomainError on empty input, non-positive proportions, duplicate or
  // unordered labels, or a total deviating from 1 by more than kNormTolerance.
  explicit WeightedDatabase(std::vector<Entry> entries);

  // Labels 1..N.
  static WeightedDatabase from_proportions(std::span<const double> proportions);

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

private:
  std::vector<Entry> entries_;
};

// P(n) = 1/sqrt(N) over labels 1..N. Requires N >= 2.
AmplitudeDistribution uniform(long n);

// Truncated coherent state over photon numbers q1..q1+n inclusive (n + 1
// entries), amplitudes proportional to alpha^q / sqrt(q!) and renormalized on
// the window. Evaluated in the log domain so large q cannot overflow.
AmplitudeDistribution truncated_coherent(Complex alpha, long q1, long n);

// Normalization factor N_q of the truncated window, including the
// exp(-|alpha|^2) factor: [sum_q e^{-|alpha|^2} |alpha|^{2q} / q!]^{-1/2}.
double coherent_normalization(double alpha_abs, long q1, long n);

// P(n) = sqrt(p_n), phase 0.
AmplitudeDistribution from_weights(const WeightedDatabase& db);

inline double proportion(const AmplitudeDistribution& dist, Label k) {
  return dist.proportion(k);
}

}  // namespace wgrover
