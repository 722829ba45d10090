#include "qfmimo/qmimo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>

#include "qfmimo/channel.hpp"

namespace qfmimo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// log2(1 + e_y2/N) for the quantizer of one row.
double quantizer_information(double e_y2, double noise) {
  if (noise == 0.0) return kInf;
  return std::log1p(e_y2 / noise) / std::numbers::ln2;
}

double quantization_exponent(double c_link, double delta, double n, double n2) {
  return (1.0 - delta) / delta * (n / (4.0 * n2)) * c_link;
}

bool leq_with_roundoff(double lhs, double rhs) {
  return lhs <= rhs || lhs <= rhs + 1e-12 * std::abs(rhs);
}

}  // namespace

double QuantizerNoiseProfile::max_noise() const {
  double best = 0.0;
  for (double v : noise) best = std::max(best, v);
  return best;
}

double QuantizerNoiseProfile::min_link_capacity() const {
  double best = kInf;
  for (std::size_t i = 0; i < link_capacity.size(); ++i)
    if (i != target) best = std::min(best, link_capacity[i]);
  return best;
}

double received_power(const NetworkRealization& realization, std::size_t k, std::size_t rank, double p0,
                      double alpha) {
  const std::size_t n2 = realization.n2_of(k);
  if (rank >= n2) throw ParameterError("member rank out of range");
  const double ratio = realization.member_distance(k, n2 - 1) / realization.member_distance(k, rank);
  return p0 * std::pow(ratio, alpha) + 1.0;
}

double quantization_noise(double e_y2, double c_link, double delta, double n, double n2) {
  if (!(c_link > 0.0)) return kInf;
  const double x = quantization_exponent(c_link, delta, n, n2);
  // 2^x - 1 ~ 2^x once x is large; avoids overflow to inf before N underflows.
  if (x > 60.0) return e_y2 * std::exp2(-x);
  const double denom = x < 1.0 ? std::expm1(x * std::numbers::ln2) : std::exp2(x) - 1.0;
  return e_y2 / denom;
}

QuantizerNoiseProfile noise_profile(const NetworkRealization& realization, std::size_t k, std::size_t target,
                                    const LinkCapacityModel& link_model, const NetworkParams& params) {
  const std::size_t n2 = realization.n2_of(k);
  if (target >= n2) throw ParameterError("target rank out of range");
  const auto n = static_cast<double>(realization.n());

  QuantizerNoiseProfile profile;
  profile.group = k;
  profile.target = target;
  profile.noise.resize(n2);
  profile.link_capacity.resize(n2);
  profile.received_power.resize(n2);
  for (std::size_t i = 0; i < n2; ++i) {
    profile.received_power[i] = received_power(realization, k, i, params.p0, params.alpha);
    if (i == target) {
      profile.noise[i] = 0.0;
      profile.link_capacity[i] = kInf;
      continue;
    }
    const double c = link_capacity(realization, k, i, target, link_model, params.seed);
    profile.link_capacity[i] = c;
    profile.noise[i] = quantization_noise(profile.received_power[i], c, params.delta, n, static_cast<double>(n2));
  }
  return profile;
}

std::vector<double> phase1_row_scale(const NetworkRealization& realization, const QuantizerNoiseProfile& profile,
                                     const NetworkParams& params) {
  const auto gamma = group_gamma(realization, profile.group, params.alpha);
  const double base = std::sqrt(params.p0 / params.m);
  std::vector<double> scale(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const double noise = profile.noise.at(i);
    scale[i] = std::isinf(noise) ? 0.0 : base * gamma[i] / std::sqrt(1.0 + noise);
  }
  return scale;
}

std::uint64_t phase1_stream(const NetworkParams& params, std::size_t k, std::size_t target) {
  return derive_seed(params.seed, {key(StreamTag::phase1), k, target});
}

DestinationRate achievable_rate(const NetworkRealization& realization, const QuantizerNoiseProfile& profile,
                                const NetworkParams& params, Execution exec) {
  const auto scale = phase1_row_scale(realization, profile, params);
  DestinationRate out;
  out.group = profile.group;
  out.rank = profile.target;
  out.destination = realization.group(profile.group).members.at(profile.target);
  out.log_det = mc_log2det(scale, params.m, params.trials, phase1_stream(params, profile.group, profile.target), exec);
  const double factor = params.delta / static_cast<double>(realization.n());
  out.rate = factor * out.log_det.mean;
  out.std_error = factor * out.log_det.std_error;
  out.profile = profile;
  return out;
}

DestinationRate achievable_rate(const NetworkRealization& realization, std::size_t k, std::size_t target,
                                const LinkCapacityModel& link_model, const NetworkParams& params, Execution exec) {
  return achievable_rate(realization, noise_profile(realization, k, target, link_model, params), params, exec);
}

MonteCarloEstimate rate_lower_bound_iid(std::size_t n2, int m, double p0, double n_q_max, double delta, double n,
                                        int trials, std::uint64_t stream_seed, Execution exec) {
  if (!(n_q_max >= 0.0)) throw ParameterError("n_q_max must be >= 0");
  if (n2 == 0 || m < 1) throw ParameterError("rate_lower_bound_iid needs n2, m >= 1");
  const std::vector<double> scale(n2, std::sqrt(p0 / (m * (1.0 + n_q_max))));
  auto est = mc_log2det(scale, m, trials, stream_seed, exec);
  est.mean *= delta / n;
  est.std_error *= delta / n;
  return est;
}

bool check_theorem2_constraints(double r, std::span<const double> r_q, std::span<const double> c,
                                std::span<const double> mi_quantize, double mi_decode, double delta, double n,
                                std::size_t n2) {
  if (r_q.size() != n2 || c.size() != n2 || mi_quantize.size() != n2)
    throw ParameterError("constraint vectors must all have length n2");
  const double link_share = (1.0 - delta) / (4.0 * static_cast<double>(n2));
  const double phase1_share = delta / n;
  for (std::size_t i = 0; i < n2; ++i) {
    if (!leq_with_roundoff(r_q[i], link_share * c[i])) return false;
    if (!leq_with_roundoff(phase1_share * mi_quantize[i], r_q[i])) return false;
  }
  return leq_with_roundoff(r, phase1_share * mi_decode);
}

bool pipeline_satisfies_constraints(const DestinationRate& rate, const NetworkParams& params, double n) {
  const auto& profile = rate.profile;
  const std::size_t n2 = profile.noise.size();
  std::vector<double> r_q(n2), c(n2), mi(n2);
  for (std::size_t i = 0; i < n2; ++i) {
    c[i] = std::max(profile.link_capacity[i], 0.0);
    const double noise = profile.noise[i];
    mi[i] = quantizer_information(profile.received_power[i], noise);
    if (i != profile.target && std::isinf(mi[i]))
      mi[i] = quantization_exponent(c[i], params.delta, n, static_cast<double>(n2));  // N underflowed
    r_q[i] = params.delta / n * mi[i];
  }
  return check_theorem2_constraints(rate.rate, r_q, c, mi, rate.log_det.mean, params.delta, n, n2);
}

RateReport sum_rate(const NetworkRealization& realization, const LinkCapacityModel& link_model,
                    const NetworkParams& params, int sample_size, Execution exec) {
  if (sample_size < 1) throw ParameterError("sample_size must be >= 1");
  const std::size_t n = realization.n();
  if (n == 0) throw ParameterError("sum_rate needs at least one destination");

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::vector<std::size_t> picked;
  RateReport report;
  if (static_cast<std::size_t>(sample_size) >= n) {
    picked = all;
  } else {
    Engine engine = make_engine(params.seed, {key(StreamTag::sample)});
    std::sample(all.begin(), all.end(), std::back_inserter(picked), sample_size, engine);
    report.sampled = true;
  }

  report.evaluated.resize(picked.size());
  auto evaluate = [&](std::size_t s) {
    const std::size_t dest = picked[s];
    const std::size_t k = realization.group_of(dest);
    report.evaluated[s] = achievable_rate(realization, k, realization.rank_of(dest), link_model, params,
                                          Execution::serial);
  };

  if (exec == Execution::serial) {
    for (std::size_t s = 0; s < picked.size(); ++s) evaluate(s);
  } else {
    std::exception_ptr failure;
    const auto count = static_cast<long long>(picked.size());
#pragma omp parallel for schedule(dynamic)
    for (long long s = 0; s < count; ++s) {
      try {
        evaluate(static_cast<std::size_t>(s));
      } catch (...) {
#pragma omp critical(qfmimo_sum_rate_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  const auto worst = std::min_element(report.evaluated.begin(), report.evaluated.end(),
                                      [](const DestinationRate& a, const DestinationRate& b) { return a.rate < b.rate; });
  report.r_ind = worst->rate;
  report.r_ind_std_error = worst->std_error;
  report.r_sum = static_cast<double>(n) * report.r_ind;
  report.r_sum_std_error = static_cast<double>(n) * report.r_ind_std_error;
  report.noise_max = 0.0;
  report.link_capacity_min = kInf;
  for (const auto& e : report.evaluated) {
    report.noise_max = std::max(report.noise_max, e.profile.max_noise());
    report.link_capacity_min = std::min(report.link_capacity_min, e.profile.min_link_capacity());
  }
  return report;
}

}  // namespace qfmimo
