#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "svg.hpp"
#include "wgrover/continuum.hpp"
#include "wgrover/distribution_spec.hpp"
#include "wgrover/errors.hpp"
#include "wgrover/grover.hpp"

namespace wgrover::cli {

namespace fs = std::filesystem;

namespace {

// Parameters read off the figure captions.
constexpr long kFigureN = 20;
constexpr long kFigureQ1 = 1;
constexpr Label kFigure2Target = 1;
constexpr Label kFigure4Target = 3;
constexpr int kFigureRMax = 40;
constexpr double kFigureAlphas[] = {0.8, 1.6, 2.4, 3.2};

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string alpha_tag(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "alpha_%.1f", alpha);
  return buf;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}

fs::path write_file(const fs::path& path, const std::function<void(std::ostream&)>& writer) {
  ensure_dir(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  writer(os);
  os.flush();
  if (!os) throw IoError("failed writing " + path.string());
  return path;
}

Label require_target(const RunConfig& config) {
  if (!config.target) throw ValidationError("--target is required for this command");
  return *config.target;
}

void check_config(const RunConfig& config) {
  if (config.r_max < 1) throw ValidationError("--rmax must be at least 1");
}

std::string coherent_spec(double alpha) {
  std::ostringstream os;
  os << R"({"kind":"coherent","alpha_re":)" << alpha << R"(,"alpha_im":0.0,"q1":)" << kFigureQ1
     << R"(,"n":)" << kFigureN << '}';
  return os.str();
}

std::string uniform_spec(long n) {
  return R"({"kind":"uniform","n":)" + std::to_string(n) + "}";
}

// Shared by the public commands and the figure driver.

void emit_distribution(const AmplitudeDistribution& dist, const fs::path& dir,
                       const std::string& stem, bool svg, CommandResult& out) {
  out.files.push_back(write_file(dir / (stem + ".csv"),
                                 [&](std::ostream& os) { write_distribution_csv(os, dist); }));
  if (svg) {
    std::vector<double> xs, ys;
    for (Label k : dist.labels()) {
      xs.push_back(static_cast<double>(k));
      ys.push_back(dist.proportion(k));
    }
    out.files.push_back(write_file(dir / (stem + ".svg"), [&](std::ostream& os) {
      write_bar_plot(os, {"Database distribution", "k", "p_k"}, xs, ys);
    }));
  }
}

Peak emit_trajectory(const AmplitudeDistribution& dist, Label k, int r_max, const fs::path& dir,
                     const std::string& stem, bool svg, CommandResult& out) {
  const Trajectory traj = iterate(dist, k, r_max);
  out.files.push_back(write_file(dir / (stem + ".csv"),
                                 [&](std::ostream& os) { write_trajectory_csv(os, traj); }));
  if (svg) {
    Series a{"a_r", {}, {}, true}, b{"b_r", {}, {}, true}, prob{"success prob", {}, {}, true};
    for (const auto& pt : traj.points) {
      const double r = static_cast<double>(pt.r);
      a.xs.push_back(r);
      a.ys.push_back(pt.state.a.real());
      b.xs.push_back(r);
      b.ys.push_back(pt.state.b.real());
      prob.xs.push_back(r);
      prob.ys.push_back(pt.success_prob);
    }
    out.files.push_back(write_file(dir / (stem + ".svg"), [&](std::ostream& os) {
      write_line_plot(os, {"Discrete recurrence, k = " + std::to_string(k), "r", "amplitude"},
                      {a, b, prob});
    }));
  }
  return first_peak(traj);
}

ContinuumSolution emit_continuum(const AmplitudeDistribution& dist, Label k, int r_max,
                                 double x_step, const fs::path& dir, const std::string& stem,
                                 bool svg, CommandResult& out) {
  const ContinuumSolution sol = fit_from_first_iterate(dist.amplitude(k));
  const auto samples = sample_continuum(sol, static_cast<double>(r_max - 1), x_step);
  out.files.push_back(write_file(dir / (stem + ".csv"),
                                 [&](std::ostream& os) { write_continuum_csv(os, samples); }));
  if (svg) {
    Series fa{"f_a", {}, {}, false}, fb{"f_b", {}, {}, false};
    for (const auto& s : samples) {
      fa.xs.push_back(s.x);
      fa.ys.push_back(s.f_a);
      fb.xs.push_back(s.x);
      fb.ys.push_back(s.f_b);
    }
    out.files.push_back(write_file(dir / (stem + ".svg"), [&](std::ostream& os) {
      write_line_plot(os, {"Continuum approximation, k = " + std::to_string(k), "x", "amplitude"},
                      {fa, fb});
    }));
  }
  return sol;
}

std::vector<ComparisonRow> emit_comparison(const AmplitudeDistribution& dist, int r_max,
                                           const fs::path& dir, const std::string& stem,
                                           bool reciprocal_svg, bool ln_svg, CommandResult& out) {
  const auto rows = comparison_table(dist, r_max);
  out.files.push_back(write_file(dir / (stem + ".csv"),
                                 [&](std::ostream& os) { write_comparison_csv(os, rows); }));
  Series rc{"classical 1/s = p_k", {}, {}, true}, rg{"Grover 1/s = dt(k)", {}, {}, true};
  Series lc{"classical ln(1/p_k)", {}, {}, true}, lg{"Grover ln(1/dt(k))", {}, {}, true};
  for (const auto& r : rows) {
    const double k = static_cast<double>(r.k);
    rc.xs.push_back(k);
    rc.ys.push_back(r.recip_classical);
    rg.xs.push_back(k);
    rg.ys.push_back(r.recip_grover);
    lc.xs.push_back(k);
    lc.ys.push_back(r.ln_classical);
    lg.xs.push_back(k);
    lg.ys.push_back(r.ln_grover);
  }
  if (reciprocal_svg) {
    out.files.push_back(write_file(dir / (stem + "_reciprocals.svg"), [&](std::ostream& os) {
      write_line_plot(os, {"Reciprocal step numbers", "k", "1 / steps"}, {rc, rg});
    }));
  }
  if (ln_svg) {
    out.files.push_back(write_file(dir / (stem + "_ln.svg"), [&](std::ostream& os) {
      write_line_plot(os, {"Natural log of step numbers", "k", "ln(steps)"}, {lc, lg});
    }));
  }
  return rows;
}

std::string format_labels(const std::vector<Label>& labels) {
  std::string s = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(labels[i]);
  }
  return s + "]";
}

std::string peak_summary(const Peak& peak) {
  return "r*=" + std::to_string(peak.r) + ", prob=" + short_num(peak.prob);
}

std::string continuum_summary(const ContinuumSolution& sol) {
  return "x*=" + short_num(predicted_peak_step(sol)) + ", T=" + short_num(period(sol.p_k()));
}

}  // namespace

fs::path default_out_dir() {
  if (const char* env = std::getenv("WGROVER_OUT"); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  return fs::path("out");
}

CommandResult cmd_dist(const RunConfig& config) {
  check_config(config);
  const auto dist = parse_distribution_spec(config.spec_json);
  CommandResult out;
  emit_distribution(dist, config.out_dir, "distribution", config.svg, out);
  out.summary = "N=" + std::to_string(dist.size()) + " labels " +
                std::to_string(dist.labels().front()) + ".." +
                std::to_string(dist.labels().back());
  return out;
}

CommandResult cmd_simulate(const RunConfig& config) {
  check_config(config);
  const auto dist = parse_distribution_spec(config.spec_json);
  const Label k = require_target(config);
  CommandResult out;
  const Peak peak =
      emit_trajectory(dist, k, config.r_max, config.out_dir, "trajectory", config.svg, out);
  out.summary = peak_summary(peak);
  return out;
}

CommandResult cmd_continuum(const RunConfig& config) {
  check_config(config);
  const auto dist = parse_distribution_spec(config.spec_json);
  const Label k = require_target(config);
  CommandResult out;
  const auto sol = emit_continuum(dist, k, config.r_max, config.x_step, config.out_dir,
                                  "continuum", config.svg, out);
  out.summary = continuum_summary(sol);
  return out;
}

CommandResult cmd_compare(const RunConfig& config) {
  check_config(config);
  const auto dist = parse_distribution_spec(config.spec_json);
  CommandResult out;
  emit_comparison(dist, config.r_max, config.out_dir, "comparison", config.svg, config.svg, out);
  const GlobalSpeedup g = global_speedup(dist);
  out.summary = std::string("global_speedup=") + (g.holds ? "true" : "false") +
                " (max 1/dt at k=" + std::to_string(g.grover_witness) + ": " +
                short_num(g.max_grover_scale) + ", min 1/p at k=" +
                std::to_string(g.classical_witness) + ": " + short_num(g.min_classical_steps) +
                ")\nlocal_failures=" + format_labels(local_failures(dist));
  return out;
}

CommandResult cmd_repro(const std::string& figure, const fs::path& out_root) {
  const fs::path dir = out_root / figure;
  CommandResult out;
  std::ostringstream summary;

  if (figure == "fig2") {
    const auto dist = parse_distribution_spec(uniform_spec(kFigureN));
    const Peak peak = emit_trajectory(dist, kFigure2Target, kFigureRMax, dir, "trajectory", true, out);
    const auto sol = emit_continuum(dist, kFigure2Target, kFigureRMax, kDefaultContinuumStep, dir,
                                    "continuum", true, out);
    summary << "uniform N=" << kFigureN << " k=" << kFigure2Target << ": " << peak_summary(peak)
            << "; " << continuum_summary(sol);
  } else if (figure == "fig3") {
    for (double alpha : kFigureAlphas) {
      const auto dist = parse_distribution_spec(coherent_spec(alpha));
      emit_distribution(dist, dir, "distribution_" + alpha_tag(alpha), true, out);
    }
    summary << "coherent distributions for " << std::size(kFigureAlphas) << " alpha values";
  } else if (figure == "fig4") {
    for (double alpha : kFigureAlphas) {
      const auto dist = parse_distribution_spec(coherent_spec(alpha));
      const std::string tag = alpha_tag(alpha) + "_k" + std::to_string(kFigure4Target);
      const Peak peak =
          emit_trajectory(dist, kFigure4Target, kFigureRMax, dir, "trajectory_" + tag, true, out);
      const auto sol = emit_continuum(dist, kFigure4Target, kFigureRMax, kDefaultContinuumStep,
                                      dir, "continuum_" + tag, true, out);
      summary << alpha_tag(alpha) << ": " << peak_summary(peak) << "; "
              << continuum_summary(sol) << '\n';
    }
  } else if (figure == "fig5" || figure == "fig6") {
    const bool reciprocals = figure == "fig5";
    for (double alpha : kFigureAlphas) {
      const auto dist = parse_distribution_spec(coherent_spec(alpha));
      emit_comparison(dist, kDefaultRMax, dir, "comparison_" + alpha_tag(alpha), reciprocals,
                      !reciprocals, out);
      summary << alpha_tag(alpha) << ": local_failures=" << format_labels(local_failures(dist))
              << '\n';
    }
  } else {
    throw ValidationError("unknown figure id '" + figure + "' (expected fig2..fig6)");
  }
  out.summary = summary.str();
  if (!out.summary.empty() && out.summary.back() == '\n') out.summary.pop_back();
  return out;
}

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  if (dynamic_cast<const NumericError*>(&e)) return kExitNumeric;
  if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
      dynamic_cast<const LookupError*>(&e)) {
    return kExitValidation;
  }
  return kExitNumeric;
}

}  // namespace wgrover::cli
