#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wgrover/amplitudes.hpp"
#include "wgrover/analysis.hpp"
#include "wgrover/continuum.hpp"
#include "wgrover/grover.hpp"

namespace wgrover {

// CSV schemas written by the tool. Floats use 17 significant digits so every
// value round-trips exactly; rows end with '\n'.

inline constexpr std::string_view kDistributionHeader = "k,p_k";
inline constexpr std::string_view kTrajectoryHeader = "r,a_re,a_im,b_re,b_im,success_prob";
inline constexpr std::string_view kContinuumHeader = "x,f_a,f_b";
inline constexpr std::string_view kComparisonHeader =
    "k,p_k,classical_steps,grover_scale,discrete_peak,recip_classical,recip_grover,"
    "ln_classical,ln_grover";

inline constexpr double kDefaultContinuumStep = 0.01;

std::string format_double(double v);

struct DistributionRow {
  Label k = 0;
  double p_k = 0.0;
};

struct ContinuumSample {
  double x = 0.0;
  double f_a = 0.0;
  double f_b = 0.0;
};

void write_distribution_csv(std::ostream& os, const AmplitudeDistribution& dist);
std::vector<DistributionRow> read_distribution_csv(std::istream& is);

void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
// Points only; the target and P(k) are not part of the schema.
std::vector<TrajectoryPoint> read_trajectory_csv(std::istream& is);

// Samples x = 0, step, 2*step, ... up to x_max inclusive.
std::vector<ContinuumSample> sample_continuum(const ContinuumSolution& sol, double x_max,
                                              double step = kDefaultContinuumStep);
void write_continuum_csv(std::ostream& os, std::span<const ContinuumSample> samples);
std::vector<ContinuumSample> read_continuum_csv(std::istream& is);

// An absent discrete peak is written as an empty field.
void write_comparison_csv(std::ostream& os, std::span<const ComparisonRow> rows);
std::vector<ComparisonRow> read_comparison_csv(std::istream& is);

}  // namespace wgrover
