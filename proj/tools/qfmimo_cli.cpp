// Command-line driver: single points and m-sweeps written as CSV.
//
//   qfmimo --m 8 --beta 3
//   qfmimo --sweep 4,8,16,32 --beta 3 --fit m_log_m_ratio --out sweep.csv
//   qfmimo --config run.ini --trials 50

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qfmimo/harness.hpp"
#include "qfmimo/logdet.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 2;
constexpr int kExitNumerical = 3;

void print_fit(const qfmimo::FitResult& fit) {
  if (fit.model == qfmimo::FitModel::power_law) {
    std::fprintf(stderr, "fit power_law slope=%.6g residual=%.6g\n", fit.slope, fit.residual);
    return;
  }
  std::fprintf(stderr, "fit m_log_m_ratio max/min=%.6g ratios=", fit.ratio_spread);
  for (std::size_t i = 0; i < fit.ratios.size(); ++i)
    std::fprintf(stderr, "%s%.6g", i ? "," : "", fit.ratios[i]);
  std::fprintf(stderr, "\n");
}

}  // namespace

int main(int argc, char** argv) {
  qfmimo::NetworkParams params;
  std::string mode = "tdma";
  std::string sweep;
  std::string fit;
  std::string out_path;
  int workers = 0;
  bool no_timing = false;

  CLI::App app{"Quantize-and-forward cooperative MIMO rate simulator"};
  app.set_config("--config", "", "flat key=value file mirroring the flags; flags override it");
  app.allow_config_extras(false);
  app.add_option("--m", params.m, "source antenna count")->check(CLI::PositiveNumber);
  app.add_option("--beta", params.beta, "n = round(m^beta)");
  app.add_option("--alpha", params.alpha, "path-loss exponent (> 2)");
  app.add_option("--p0", params.p0, "source power");
  app.add_option("--p1", params.p1, "per-destination power");
  app.add_option("--q", params.q, "cell area exponent, cells of area n^-q");
  app.add_option("--delta", params.delta, "Phase-1 time fraction");
  app.add_option("--mode", mode, "Phase-2 cooperation")->check(CLI::IsMember({"tdma", "hier"}));
  app.add_option("--epsilon", params.epsilon, "hierarchical exponent");
  app.add_option("--c2", params.c2, "hierarchical rate constant");
  app.add_option("--exclusion-radius", params.exclusion_radius, "no destinations within this distance of the source");
  app.add_option("--trials", params.trials, "Monte Carlo trials per expectation");
  app.add_option("--sample-size", params.sample_size, "destinations evaluated for R_ind");
  app.add_option("--seed", params.seed, "master seed");
  app.add_option("--sweep", sweep, "comma-separated ascending m values");
  app.add_option("--fit", fit, "scaling fit over the sweep")->check(CLI::IsMember({"power_law", "m_log_m_ratio"}));
  app.add_option("--out", out_path, "CSV output path (stdout if omitted)");
  app.add_option("--workers", workers, "OpenMP worker threads (0 keeps the runtime default)");
  app.add_flag("--no-timing", no_timing, "write runtime_s as 0 so output is byte-reproducible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadConfig;
  }

  std::optional<std::ofstream> file;
  std::ostream* out = &std::cout;
  try {
    params.mode = qfmimo::cooperation_mode_from_string(mode);
    params.validate();
    qfmimo::set_worker_count(workers);
    if (!fit.empty() && sweep.empty()) throw qfmimo::ParameterError("--fit needs --sweep");

    if (!out_path.empty()) {
      file.emplace(out_path);
      if (!*file) throw qfmimo::ParameterError("cannot open output file " + out_path);
      out = &*file;
    }
    *out << qfmimo::csv_header() << '\n' << std::flush;
    auto emit = [&](const qfmimo::PointResult& row) { *out << qfmimo::csv_row(row, !no_timing) << '\n' << std::flush; };

    if (sweep.empty()) {
      emit(qfmimo::run_point(params));
    } else {
      const auto m_list = qfmimo::parse_m_list(sweep);
      if (!fit.empty() && m_list.size() < 3) throw qfmimo::ParameterError("--fit needs at least 3 sweep points");
      const auto series = qfmimo::run_sweep(params, m_list, emit);
      if (!fit.empty()) print_fit(qfmimo::fit_scaling(series, qfmimo::fit_model_from_string(fit)));
    }
  } catch (const qfmimo::ParameterError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const qfmimo::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
