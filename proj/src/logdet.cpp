#include "qfmimo/logdet.hpp"

#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qfmimo {

double log2_det_identity_plus_gram(const ComplexMatrix& b) {
  const Eigen::Index side = std::min(b.rows(), b.cols());
  if (side == 0) return 0.0;
  ComplexMatrix gram(side, side);
  if (b.rows() <= b.cols())
    gram.noalias() = b * b.adjoint();
  else
    gram.noalias() = b.adjoint() * b;
  gram.diagonal().array() += 1.0;

  Eigen::LLT<ComplexMatrix> llt(gram);
  if (llt.info() != Eigen::Success) throw NumericalError("Cholesky failed on I + B B^H");
  double acc = 0.0;
  const auto& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < side; ++i) acc += std::log(l(i, i).real());
  return 2.0 * acc / std::numbers::ln2;
}

namespace {

// scratch is rows x cols and is overwritten.
double one_trial(std::span<const double> row_scale, std::uint64_t stream_seed, int t, ComplexMatrix& scratch) {
  Engine engine = make_engine(stream_seed, {static_cast<std::uint64_t>(t)});
  fill_unit_phases(scratch, engine);
  for (Eigen::Index r = 0; r < scratch.rows(); ++r) scratch.row(r) *= row_scale[static_cast<std::size_t>(r)];
  return log2_det_identity_plus_gram(scratch);
}

}  // namespace

std::vector<double> log2det_trials_serial(std::span<const double> row_scale, int cols, int trials,
                                          std::uint64_t stream_seed) {
  std::vector<double> out(static_cast<std::size_t>(trials));
  ComplexMatrix scratch(static_cast<Eigen::Index>(row_scale.size()), cols);
  for (int t = 0; t < trials; ++t) out[static_cast<std::size_t>(t)] = one_trial(row_scale, stream_seed, t, scratch);
  return out;
}

std::vector<double> log2det_trials_parallel(std::span<const double> row_scale, int cols, int trials,
                                            std::uint64_t stream_seed) {
  std::vector<double> out(static_cast<std::size_t>(trials));
#pragma omp parallel
  {
    ComplexMatrix scratch(static_cast<Eigen::Index>(row_scale.size()), cols);
#pragma omp for schedule(static)
    for (int t = 0; t < trials; ++t) out[static_cast<std::size_t>(t)] = one_trial(row_scale, stream_seed, t, scratch);
  }
  return out;
}

MonteCarloEstimate summarize(std::span<const double> samples) {
  MonteCarloEstimate est;
  est.trials = static_cast<int>(samples.size());
  if (samples.empty()) return est;
  double sum = 0.0;
  for (double v : samples) sum += v;
  est.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double v : samples) ss += (v - est.mean) * (v - est.mean);
    const double var = ss / static_cast<double>(samples.size() - 1);
    est.std_error = std::sqrt(var / static_cast<double>(samples.size()));
  }
  return est;
}

MonteCarloEstimate mc_log2det(std::span<const double> row_scale, int cols, int trials, std::uint64_t stream_seed,
                              Execution exec) {
  if (trials < 1) throw ParameterError("Monte Carlo needs trials >= 1");
  if (cols < 1) throw ParameterError("Monte Carlo needs at least one column");
  const auto samples = exec == Execution::serial ? log2det_trials_serial(row_scale, cols, trials, stream_seed)
                                                 : log2det_trials_parallel(row_scale, cols, trials, stream_seed);
  return summarize(samples);
}

void set_worker_count(int workers) {
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#else
  (void)workers;
#endif
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qfmimo
