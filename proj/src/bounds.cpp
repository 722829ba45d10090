#include "qfmimo/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace qfmimo {

UpperBoundReport cutset_upper_bound(const NetworkRealization& realization, const NetworkParams& params) {
  if (realization.n() == 0) throw ParameterError("cut-set bound needs at least one destination");
  UpperBoundReport report;
  report.branch = params.beta > 1.0 ? CutsetBranch::dense : CutsetBranch::sparse;
  double per_node = 0.0;
  for (std::size_t i = 0; i < realization.n(); ++i) {
    const double gain = std::pow(realization.source_distance(i), -params.alpha);
    if (!std::isfinite(gain)) throw NumericalError("destination coincides with the source");
    report.distance_sum += gain;
    per_node += std::log2(1.0 + params.p0 * params.m * gain);
  }
  if (report.branch == CutsetBranch::dense) {
    const double m = params.m;
    report.bound = m * std::log2(1.0 + params.p0 / m * report.distance_sum);
  } else {
    report.bound = per_node;
  }
  return report;
}

MonteCarloEstimate mimo_ergodic_capacity_mc(int n_rx, int m, double p, int trials, std::uint64_t seed,
                                            Execution exec) {
  if (n_rx < 1 || m < 1) throw ParameterError("MIMO dimensions must be >= 1");
  if (!(p >= 0.0)) throw ParameterError("power must be >= 0");
  const std::vector<double> scale(static_cast<std::size_t>(n_rx), std::sqrt(p / m));
  return mc_log2det(scale, m, trials, derive_seed(seed, {key(StreamTag::iid)}), exec);
}

AspectRegime aspect_regime_from_string(std::string_view tag) {
  if (tag == "wide" || tag == "inf") return AspectRegime::wide;
  if (tag == "square" || tag == "one") return AspectRegime::square;
  if (tag == "narrow" || tag == "zero") return AspectRegime::narrow;
  throw ParameterError("unknown regime tag '" + std::string(tag) + "'");
}

double lozano_regime_value(AspectRegime regime, double p, double a) {
  if (!(p > 0.0)) throw ParameterError("regime value needs p > 0");
  switch (regime) {
    case AspectRegime::wide:
      return std::log2(1.0 + p);
    case AspectRegime::square: {
      const double root = std::sqrt(1.0 + 4.0 * p);
      return 2.0 * std::log2((1.0 + root) / 2.0) - std::numbers::log2e / (4.0 * p) * (root - 1.0) * (root - 1.0);
    }
    case AspectRegime::narrow:
      if (!(a > 0.0)) throw ParameterError("narrow regime needs an explicit a > 0");
      return a * std::log2(p / a);
  }
  throw ParameterError("unknown regime");
}

}  // namespace qfmimo
