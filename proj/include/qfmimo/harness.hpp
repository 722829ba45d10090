#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfmimo/bounds.hpp"
#include "qfmimo/params.hpp"
#include "qfmimo/qmimo.hpp"

namespace qfmimo {

struct PointResult {
  NetworkParams params;  // params.seed is the seed this row was computed from
  long long n = 0;
  std::size_t n1 = 0;
  double n2_mean = 0.0;
  RateReport rate;
  UpperBoundReport upper;
  double runtime_s = 0.0;
};

/// One realization, one sum-rate estimate and one cut-set bound.
PointResult run_point(const NetworkParams& params, Execution exec = Execution::parallel);

struct ScalingSeries {
  std::vector<PointResult> rows;  // m strictly increasing
};

/// Seed of the sweep point for antenna count m; independent of the other points.
std::uint64_t sweep_point_seed(std::uint64_t seed, int m);

/// Runs one point per m. `on_row` sees each row as soon as it is done, so a
/// failing point still leaves the earlier rows flushed.
ScalingSeries run_sweep(const NetworkParams& params, std::span<const int> m_list,
                        const std::function<void(const PointResult&)>& on_row = {},
                        Execution exec = Execution::parallel);

enum class FitModel { power_law, m_log_m_ratio };

FitModel fit_model_from_string(std::string_view text);
std::string_view to_string(FitModel model);

struct FitResult {
  FitModel model = FitModel::power_law;
  double slope = 0.0;     // power_law: d log R / d log m
  double residual = 0.0;  // power_law: RMS residual of the log-log fit
  std::vector<double> ratios;  // m_log_m_ratio: R / (m log2 m)
  double ratio_spread = 0.0;   // m_log_m_ratio: max/min of ratios
};

FitResult fit_scaling(std::span<const double> m, std::span<const double> rate, FitModel model);
FitResult fit_scaling(const ScalingSeries& series, FitModel model);

std::string_view csv_header();
/// One CSV line without the trailing newline. With timing off runtime_s is written as 0.
std::string csv_row(const PointResult& row, bool timing = true);

/// "4,8,16" -> {4, 8, 16}; throws ParameterError on junk or non-ascending input.
std::vector<int> parse_m_list(std::string_view text);

}  // namespace qfmimo
