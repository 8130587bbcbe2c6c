#include "wgrover/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <system_error>

#include "wgrover/errors.hpp"

namespace wgrover {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T>
T parse_field(std::string_view field, std::size_t line_no) {
  T value{};
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ValidationError("line " + std::to_string(line_no) + ": cannot parse field '" +
                          std::string(field) + "'");
  }
  return value;
}

// Reads the header and every data row, checking the field count.
template <typename RowFn>
void read_rows(std::istream& is, std::string_view header, std::size_t n_fields, RowFn&& on_row) {
  std::string line;
  if (!std::getline(is, line)) throw ValidationError("empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) {
    throw ValidationError("unexpected CSV header '" + line + "', expected '" +
                          std::string(header) + "'");
  }
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != n_fields) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(n_fields) + " fields, got " +
                            std::to_string(fields.size()));
    }
    on_row(fields, line_no);
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (ec != std::errc{}) throw NumericError("failed to format floating-point value");
  return std::string(buf, ptr);
}

void write_distribution_csv(std::ostream& os, const AmplitudeDistribution& dist) {
  os << kDistributionHeader << '\n';
  for (Label k : dist.labels()) {
    os << k << ',' << format_double(dist.proportion(k)) << '\n';
  }
}

std::vector<DistributionRow> read_distribution_csv(std::istream& is) {
  std::vector<DistributionRow> rows;
  read_rows(is, kDistributionHeader, 2, [&](const auto& f, std::size_t n) {
    rows.push_back({parse_field<Label>(f[0], n), parse_field<double>(f[1], n)});
  });
  return rows;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << kTrajectoryHeader << '\n';
  for (const auto& pt : traj.points) {
    os << pt.r << ',' << format_double(pt.state.a.real()) << ','
       << format_double(pt.state.a.imag()) << ',' << format_double(pt.state.b.real()) << ','
       << format_double(pt.state.b.imag()) << ',' << format_double(pt.success_prob) << '\n';
  }
}

std::vector<TrajectoryPoint> read_trajectory_csv(std::istream& is) {
  std::vector<TrajectoryPoint> pts;
  read_rows(is, kTrajectoryHeader, 6, [&](const auto& f, std::size_t n) {
    TrajectoryPoint pt;
    pt.r = parse_field<int>(f[0], n);
    pt.state.a = {parse_field<double>(f[1], n), parse_field<double>(f[2], n)};
    pt.state.b = {parse_field<double>(f[3], n), parse_field<double>(f[4], n)};
    pt.success_prob = parse_field<double>(f[5], n);
    pts.push_back(pt);
  });
  return pts;
}

std::vector<ContinuumSample> sample_continuum(const ContinuumSolution& sol, double x_max,
                                              double step) {
  if (!(step > 0.0)) throw DomainError("continuum sampling step must be positive");
  if (!(x_max >= 0.0)) throw DomainError("continuum range must be non-negative");
  // Index-based so x carries no accumulated drift.
  const auto count = static_cast<std::size_t>(std::floor(x_max / step + 1e-9)) + 1;
  std::vector<ContinuumSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = static_cast<double>(i) * step;
    out.push_back({x, sol.eval_fa(x), sol.eval_fb(x)});
  }
  return out;
}

void write_continuum_csv(std::ostream& os, std::span<const ContinuumSample> samples) {
  os << kContinuumHeader << '\n';
  for (const auto& s : samples) {
    os << format_double(s.x) << ',' << format_double(s.f_a) << ',' << format_double(s.f_b)
       << '\n';
  }
}

std::vector<ContinuumSample> read_continuum_csv(std::istream& is) {
  std::vector<ContinuumSample> out;
  read_rows(is, kContinuumHeader, 3, [&](const auto& f, std::size_t n) {
    out.push_back(
        {parse_field<double>(f[0], n), parse_field<double>(f[1], n), parse_field<double>(f[2], n)});
  });
  return out;
}

void write_comparison_csv(std::ostream& os, std::span<const ComparisonRow> rows) {
  os << kComparisonHeader << '\n';
  for (const auto& r : rows) {
    os << r.k << ',' << format_double(r.p_k) << ',' << format_double(r.classical_steps) << ','
       << format_double(r.grover_scale) << ',';
    if (r.discrete_peak) os << *r.discrete_peak;
    os << ',' << format_double(r.recip_classical) << ',' << format_double(r.recip_grover) << ','
       << format_double(r.ln_classical) << ',' << format_double(r.ln_grover) << '\n';
  }
}

std::vector<ComparisonRow> read_comparison_csv(std::istream& is) {
  std::vector<ComparisonRow> rows;
  read_rows(is, kComparisonHeader, 9, [&](const auto& f, std::size_t n) {
    ComparisonRow r;
    r.k = parse_field<Label>(f[0], n);
    r.p_k = parse_field<double>(f[1], n);
    r.classical_steps = parse_field<double>(f[2], n);
    r.grover_scale = parse_field<double>(f[3], n);
    if (!f[4].empty()) r.discrete_peak = parse_field<int>(f[4], n);
    r.recip_classical = parse_field<double>(f[5], n);
    r.recip_grover = parse_field<double>(f[6], n);
    r.ln_classical = parse_field<double>(f[7], n);
    r.ln_grover = parse_field<double>(f[8], n);
    rows.push_back(r);
  });
  return rows;
}

}  // namespace wgrover
