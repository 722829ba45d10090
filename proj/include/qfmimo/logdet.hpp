#pragma once

// Monte Carlo log-det kernels. Each trial t draws a fresh rows x cols phase
// matrix Theta from its own substream (stream_seed, t), forms
// B = diag(row_scale) * Theta and evaluates log2 det(I + B B^H).
// The serial path is the reference; the parallel path must agree bit-for-bit.

#include <cstdint>
#include <span>
#include <vector>

#include "qfmimo/channel.hpp"

namespace qfmimo {

enum class Execution { serial, parallel };

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int trials = 0;
};

/// log2 det(I + B B^H), factored on the smaller of the two Gram sides.
double log2_det_identity_plus_gram(const ComplexMatrix& b);

std::vector<double> log2det_trials_serial(std::span<const double> row_scale, int cols, int trials,
                                          std::uint64_t stream_seed);

std::vector<double> log2det_trials_parallel(std::span<const double> row_scale, int cols, int trials,
                                            std::uint64_t stream_seed);

/// Mean and standard error of the mean, summed in index order.
MonteCarloEstimate summarize(std::span<const double> samples);

MonteCarloEstimate mc_log2det(std::span<const double> row_scale, int cols, int trials, std::uint64_t stream_seed,
                              Execution exec = Execution::parallel);

/// Sets the OpenMP thread count; no-op without OpenMP.
void set_worker_count(int workers);
int worker_count();

}  // namespace qfmimo
