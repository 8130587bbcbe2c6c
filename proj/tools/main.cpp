#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "wgrover/errors.hpp"

namespace {

std::string read_spec_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw wgrover::IoError("cannot read spec file " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = wgrover::cli;

  CLI::App app{"Grover amplitude amplification on weighted databases"};
  app.require_subcommand(1);

  std::string spec_file;
  std::string spec_inline;
  long target = 0;
  cli::RunConfig config;
  std::string out_dir;
  std::string figure;

  auto add_common = [&](CLI::App* sub, bool needs_target) {
    auto* file_opt = sub->add_option("--spec", spec_file, "distribution spec JSON file");
    auto* inline_opt = sub->add_option("--inline", spec_inline, "distribution spec as inline JSON");
    file_opt->excludes(inline_opt);
    auto* target_opt = sub->add_option("--target", target, "target label k");
    if (needs_target) target_opt->required();
    sub->add_option("--rmax", config.r_max, "iteration budget")->capture_default_str();
    sub->add_option("--out", out_dir, "output directory (default $WGROVER_OUT or ./out)");
    sub->add_flag("--svg", config.svg, "also write SVG plots");
  };

  auto* dist = app.add_subcommand("dist", "write the distribution p_k");
  add_common(dist, false);
  auto* simulate = app.add_subcommand("simulate", "run the discrete Grover recurrence");
  add_common(simulate, true);
  auto* continuum = app.add_subcommand("continuum", "sample the continuum approximation");
  add_common(continuum, true);
  continuum->add_option("--xstep", config.x_step, "sampling step in x")->capture_default_str();
  auto* compare = app.add_subcommand("compare", "classical vs Grover step comparison");
  add_common(compare, false);
  auto* repro = app.add_subcommand("repro", "reproduce a figure's data and plots");
  repro->add_option("figure", figure, "figure id")
      ->required()
      ->check(CLI::IsMember(cli::figure_ids()));
  repro->add_option("--out", out_dir, "output root (default $WGROVER_OUT or ./out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitValidation;
  }

  try {
    config.out_dir = out_dir.empty() ? cli::default_out_dir() : std::filesystem::path(out_dir);
    cli::CommandResult result;
    if (repro->parsed()) {
      result = cli::cmd_repro(figure, config.out_dir);
    } else {
      if (spec_file.empty() && spec_inline.empty()) {
        throw wgrover::ValidationError("one of --spec or --inline is required");
      }
      config.spec_json = spec_file.empty() ? spec_inline : read_spec_file(spec_file);
      for (auto* sub : {dist, simulate, continuum, compare}) {
        if (sub->parsed() && sub->get_option("--target")->count() > 0) config.target = target;
      }
      if (dist->parsed()) result = cli::cmd_dist(config);
      if (simulate->parsed()) result = cli::cmd_simulate(config);
      if (continuum->parsed()) result = cli::cmd_continuum(config);
      if (compare->parsed()) result = cli::cmd_compare(config);
    }
    std::cout << result.summary << '\n';
    return cli::kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code_for(e);
  }
}
