#pragma once

// Quantize-and-forward rate machinery for one source and the destination groups.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qfmimo/linkrate.hpp"
#include "qfmimo/logdet.hpp"
#include "qfmimo/netgeom.hpp"
#include "qfmimo/params.hpp"

namespace qfmimo {

/// Quantization noise and link capacity of every member of group k as seen by
/// the target rank. The target's own row has noise 0 and infinite capacity.
/// An infinite noise marks a relay whose link carries nothing (dropped row).
struct QuantizerNoiseProfile {
  std::size_t group = 0;
  std::size_t target = 0;
  std::vector<double> noise;
  std::vector<double> link_capacity;
  std::vector<double> received_power;

  /// Largest finite noise; +inf if some relay is dropped.
  [[nodiscard]] double max_noise() const;
  /// Smallest capacity over relay links (the self link excluded).
  [[nodiscard]] double min_link_capacity() const;
};

struct DestinationRate {
  std::size_t destination = 0;
  std::size_t group = 0;
  std::size_t rank = 0;
  MonteCarloEstimate log_det;  // E log2 det(...) in bits, before the Delta/n factor
  double rate = 0.0;           // R(k,j)
  double std_error = 0.0;
  QuantizerNoiseProfile profile;
};

struct RateReport {
  std::vector<DestinationRate> evaluated;  // ordered by destination index
  double r_ind = 0.0;
  double r_ind_std_error = 0.0;
  double r_sum = 0.0;
  double r_sum_std_error = 0.0;
  double noise_max = 0.0;
  double link_capacity_min = 0.0;
  bool sampled = false;  // true if fewer than n destinations were evaluated
};

/// p0 (d(k,n2)/d(k,i))^alpha + 1.
double received_power(const NetworkRealization& realization, std::size_t k, std::size_t rank, double p0, double alpha);

/// e_y2 / (2^(((1-delta)/delta) * (n/(4 n2)) * c_link) - 1). Returns +inf for c_link <= 0.
double quantization_noise(double e_y2, double c_link, double delta, double n, double n2);

QuantizerNoiseProfile noise_profile(const NetworkRealization& realization, std::size_t k, std::size_t target,
                                    const LinkCapacityModel& link_model, const NetworkParams& params);

/// Row scales sqrt(p0/m) * gamma_i / sqrt(1 + N_i); 0 for dropped rows.
std::vector<double> phase1_row_scale(const NetworkRealization& realization, const QuantizerNoiseProfile& profile,
                                     const NetworkParams& params);

/// Substream seed of the Phase-1 phase draws for (k, target); shared by every
/// noise profile so rate comparisons run on identical phases.
std::uint64_t phase1_stream(const NetworkParams& params, std::size_t k, std::size_t target);

/// Monte Carlo estimate of R(k,j) = (delta/n) E log2 det(I + (p0/m) G T T^H G Q^-1).
DestinationRate achievable_rate(const NetworkRealization& realization, const QuantizerNoiseProfile& profile,
                                const NetworkParams& params, Execution exec = Execution::parallel);

DestinationRate achievable_rate(const NetworkRealization& realization, std::size_t k, std::size_t target,
                                const LinkCapacityModel& link_model, const NetworkParams& params,
                                Execution exec = Execution::parallel);

/// (delta/n) E log2 det(I + p0/(m(1+n_q_max)) T T^H) over i.i.d. phase matrices.
MonteCarloEstimate rate_lower_bound_iid(std::size_t n2, int m, double p0, double n_q_max, double delta, double n,
                                        int trials, std::uint64_t stream_seed, Execution exec = Execution::parallel);

/// The three rate constraints: r_q(i) <= ((1-delta)/(4 n2)) c(i),
/// r_q(i) >= (delta/n) mi_quantize(i), r <= (delta/n) mi_decode.
/// Comparisons allow 1e-12 relative round-off. Throws on length mismatch.
bool check_theorem2_constraints(double r, std::span<const double> r_q, std::span<const double> c,
                                std::span<const double> mi_quantize, double mi_decode, double delta, double n,
                                std::size_t n2);

/// Builds (R_Q, C, I(Y;Yhat)) from a pipeline result and runs the check.
bool pipeline_satisfies_constraints(const DestinationRate& rate, const NetworkParams& params, double n);

/// Evaluates R(k,j) on a seeded sample of destinations (all if sample_size >= n);
/// R_ind = min, R_sum = n R_ind.
RateReport sum_rate(const NetworkRealization& realization, const LinkCapacityModel& link_model,
                    const NetworkParams& params, int sample_size, Execution exec = Execution::parallel);

}  // namespace qfmimo
