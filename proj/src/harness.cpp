#include "qfmimo/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "qfmimo/linkrate.hpp"
#include "qfmimo/netgeom.hpp"

namespace qfmimo {

PointResult run_point(const NetworkParams& params, Execution exec) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();

  PointResult out;
  out.params = params;
  const NetworkRealization realization = place_nodes(params);
  out.n = static_cast<long long>(realization.n());
  out.n1 = realization.n1();
  out.n2_mean = realization.n2_mean();
  out.rate = sum_rate(realization, LinkCapacityModel::from_params(params), params, params.sample_size, exec);
  out.upper = cutset_upper_bound(realization, params);
  if (!std::isfinite(out.rate.r_sum) || !std::isfinite(out.upper.bound))
    throw NumericalError("non-finite rate at m=" + std::to_string(params.m));

  out.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::uint64_t sweep_point_seed(std::uint64_t seed, int m) {
  return derive_seed(seed, {key(StreamTag::sweep), static_cast<std::uint64_t>(m)});
}

ScalingSeries run_sweep(const NetworkParams& params, std::span<const int> m_list,
                        const std::function<void(const PointResult&)>& on_row, Execution exec) {
  if (m_list.empty()) throw ParameterError("sweep needs at least one m");
  for (std::size_t i = 1; i < m_list.size(); ++i)
    if (m_list[i] <= m_list[i - 1]) throw ParameterError("sweep m values must be strictly increasing");

  ScalingSeries series;
  for (int m : m_list) {
    NetworkParams point = params;
    point.m = m;
    point.seed = sweep_point_seed(params.seed, m);
    series.rows.push_back(run_point(point, exec));
    if (on_row) on_row(series.rows.back());
  }
  return series;
}

FitModel fit_model_from_string(std::string_view text) {
  if (text == "power_law") return FitModel::power_law;
  if (text == "m_log_m_ratio") return FitModel::m_log_m_ratio;
  throw ParameterError("unknown fit model '" + std::string(text) + "'");
}

std::string_view to_string(FitModel model) {
  return model == FitModel::power_law ? "power_law" : "m_log_m_ratio";
}

FitResult fit_scaling(std::span<const double> m, std::span<const double> rate, FitModel model) {
  if (m.size() != rate.size()) throw ParameterError("fit needs matching m and rate columns");
  if (m.size() < 3) throw ParameterError("fit needs at least 3 points");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!(rate[i] > 0.0)) throw ParameterError("fit needs positive rates");
    if (!(m[i] > 0.0)) throw ParameterError("fit needs positive m");
  }

  FitResult fit;
  fit.model = model;
  if (model == FitModel::power_law) {
    const auto count = static_cast<double>(m.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const double x = std::log(m[i]), y = std::log(rate[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double denom = count * sxx - sx * sx;
    if (!(denom > 0.0)) throw ParameterError("fit needs at least two distinct m values");
    fit.slope = (count * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.slope * sx) / count;
    double ss = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const double r = std::log(rate[i]) - (intercept + fit.slope * std::log(m[i]));
      ss += r * r;
    }
    fit.residual = std::sqrt(ss / count);
  } else {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!(m[i] > 1.0)) throw ParameterError("m log m ratio needs m > 1");
      fit.ratios.push_back(rate[i] / (m[i] * std::log2(m[i])));
    }
    const auto [lo, hi] = std::minmax_element(fit.ratios.begin(), fit.ratios.end());
    fit.ratio_spread = *hi / *lo;
  }
  return fit;
}

FitResult fit_scaling(const ScalingSeries& series, FitModel model) {
  std::vector<double> m, rate;
  for (const auto& row : series.rows) {
    m.push_back(row.params.m);
    rate.push_back(row.rate.r_sum);
  }
  return fit_scaling(m, rate, model);
}

std::string_view csv_header() {
  return "m,n,n1,n2_mean,mode,R_sum,R_sum_stderr,R_upper,N_max,C_link_min,runtime_s,seed";
}

namespace {

std::string number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string csv_row(const PointResult& row, bool timing) {
  std::string line;
  line += std::to_string(row.params.m) + ',';
  line += std::to_string(row.n) + ',';
  line += std::to_string(row.n1) + ',';
  line += number(row.n2_mean) + ',';
  line += std::string(to_string(row.params.mode)) + ',';
  line += number(row.rate.r_sum) + ',';
  line += number(row.rate.r_sum_std_error) + ',';
  line += number(row.upper.bound) + ',';
  line += number(row.rate.noise_max) + ',';
  line += number(row.rate.link_capacity_min) + ',';
  line += (timing ? number(row.runtime_s) : std::string("0")) + ',';
  line += std::to_string(row.params.seed);
  return line;
}

std::vector<int> parse_m_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size() || value < 1)
      throw ParameterError("bad sweep entry '" + std::string(item) + "'");
    if (!out.empty() && value <= out.back()) throw ParameterError("sweep m values must be strictly increasing");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace qfmimo
