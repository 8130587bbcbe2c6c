#include "wgrover/amplitudes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wgrover/errors.hpp"

namespace wgrover {

namespace {

void check_labels(std::span<const Label> labels) {
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] <= labels[i - 1]) {
      throw DomainError("labels must be strictly increasing (label " + std::to_string(labels[i]) +
                        " follows " + std::to_string(labels[i - 1]) + ")");
    }
  }
}

// log of |alpha|^{2q} / q! for each q in the window.
std::vector<double> coherent_log_weights(double log_abs_alpha, long q1, long n) {
  std::vector<double> logw;
  logw.reserve(static_cast<std::size_t>(n) + 1);
  for (long q = q1; q <= q1 + n; ++q) {
    const double qd = static_cast<double>(q);
    logw.push_back(2.0 * qd * log_abs_alpha - std::lgamma(qd + 1.0));
  }
  return logw;
}

double log_sum_exp(std::span<const double> xs) {
  const double m = *std::max_element(xs.begin(), xs.end());
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

void check_coherent_args(double alpha_abs, long q1, long n) {
  if (!(alpha_abs > 0.0) || !std::isfinite(alpha_abs)) {
    throw DomainError("coherent amplitude alpha must be nonzero and finite");
  }
  if (q1 < 0) throw DomainError("q1 must be non-negative");
  if (n < 2) throw DomainError("database needs N >= 2 (N = 1 is the trivial one-step case)");
}

}  // namespace

AmplitudeDistribution::AmplitudeDistribution(std::vector<Label> labels,
                                             std::vector<Complex> amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
  if (labels_.size() != amplitudes_.size()) {
    throw DomainError("label and amplitude counts differ");
  }
  if (amplitudes_.size() < 2) {
    throw DomainError("database needs N >= 2 (N = 1 is the trivial one-step case)");
  }
  check_labels(labels_);
  double norm2 = 0.0;
  for (const Complex& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw DomainError("amplitudes must be finite");
    }
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw DomainError("amplitudes are not normalized (sum |P|^2 = " + std::to_string(norm2) + ")");
  }
}

bool AmplitudeDistribution::contains(Label k) const noexcept {
  return std::binary_search(labels_.begin(), labels_.end(), k);
}

std::size_t AmplitudeDistribution::index_of(Label k) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), k);
  if (it == labels_.end() || *it != k) {
    throw LookupError("label " + std::to_string(k) + " is not in the distribution");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

double AmplitudeDistribution::proportion(Label k) const {
  return std::norm(amplitude(k));
}

WeightedDatabase AmplitudeDistribution::to_database() const {
  std::vector<WeightedDatabase::Entry> entries;
  entries.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    entries.push_back({labels_[i], std::norm(amplitudes_[i])});
  }
  return WeightedDatabase(std::move(entries));
}

WeightedDatabase::WeightedDatabase(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("weighted database is empty");
  double total = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (!(e.proportion > 0.0) || e.proportion > 1.0) {
      throw DomainError("proportion for label " + std::to_string(e.label) + " must lie in (0, 1]");
    }
    if (i > 0 && e.label <= entries_[i - 1].label) {
      throw DomainError("database labels must be strictly increasing");
    }
    total += e.proportion;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw DomainError("proportions sum to " + std::to_string(total) + ", expected 1");
  }
}

WeightedDatabase WeightedDatabase::from_proportions(std::span<const double> proportions) {
  std::vector<Entry> entries;
  entries.reserve(proportions.size());
  Label label = 1;
  for (double p : proportions) entries.push_back({label++, p});
  return WeightedDatabase(std::move(entries));
}

AmplitudeDistribution uniform(long n) {
  if (n < 2) throw DomainError("database needs N >= 2 (N = 1 is the trivial one-step case)");
  std::vector<Label> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), Label{1});
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> amps(static_cast<std::size_t>(n), Complex{amp, 0.0});
  return AmplitudeDistribution(std::move(labels), std::move(amps));
}

AmplitudeDistribution truncated_coherent(Complex alpha, long q1, long n) {
  const double alpha_abs = std::abs(alpha);
  check_coherent_args(alpha_abs, q1, n);
  const double phase = std::arg(alpha);

  const std::vector<double> logw = coherent_log_weights(std::log(alpha_abs), q1, n);
  const double log_total = log_sum_exp(logw);

  std::vector<Label> labels;
  std::vector<Complex> amps;
  labels.reserve(logw.size());
  amps.reserve(logw.size());
  for (std::size_t i = 0; i < logw.size(); ++i) {
    const Label q = q1 + static_cast<Label>(i);
    const double magnitude = std::exp(0.5 * (logw[i] - log_total));
    labels.push_back(q);
    amps.push_back(std::polar(magnitude, static_cast<double>(q) * phase));
  }

  // Absorb the last bits of round-off so the distribution meets kNormTolerance
  // even for long windows.
  double norm2 = 0.0;
  for (const Complex& a : amps) norm2 += std::norm(a);
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& a : amps) a *= scale;

  return AmplitudeDistribution(std::move(labels), std::move(amps));
}

double coherent_normalization(double alpha_abs, long q1, long n) {
  check_coherent_args(alpha_abs, q1, n);
  const std::vector<double> logw = coherent_log_weights(std::log(alpha_abs), q1, n);
  const double log_sum = -alpha_abs * alpha_abs + log_sum_exp(logw);
  return std::exp(-0.5 * log_sum);
}

AmplitudeDistribution from_weights(const WeightedDatabase& db) {
  std::vector<Label> labels;
  std::vector<Complex> amps;
  labels.reserve(db.size());
  amps.reserve(db.size());
  for (const auto& e : db.entries()) {
    labels.push_back(e.label);
    amps.emplace_back(std::sqrt(e.proportion), 0.0);
  }
  return AmplitudeDistribution(std::move(labels), std::move(amps));
}

}  // namespace wgrover
