#include "qfmimo/channel.hpp"

#include <cmath>
#include <numbers>

namespace qfmimo {

void fill_unit_phases(ComplexMatrix& theta, Engine& engine) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (Eigen::Index c = 0; c < theta.cols(); ++c)
    for (Eigen::Index r = 0; r < theta.rows(); ++r) theta(r, c) = std::polar(1.0, angle(engine));
}

std::vector<double> group_gamma(const NetworkRealization& realization, std::size_t k, double alpha) {
  const std::size_t n2 = realization.n2_of(k);
  const double farthest = realization.member_distance(k, n2 - 1);
  std::vector<double> gamma(n2);
  for (std::size_t i = 0; i < n2; ++i)
    gamma[i] = std::pow(farthest / realization.member_distance(k, i), alpha / 2.0);
  gamma[n2 - 1] = 1.0;
  return gamma;
}

GroupChannel sample_group_channel(const NetworkRealization& realization, std::size_t k,
                                  const NetworkParams& params, Engine& engine) {
  const std::size_t n2 = realization.n2_of(k);
  if (n2 == 0) throw ParameterError("sample_group_channel on an empty group");
  GroupChannel channel;
  channel.group = k;
  channel.gamma = group_gamma(realization, k, params.alpha);
  channel.path_gain.resize(n2);
  for (std::size_t i = 0; i < n2; ++i)
    channel.path_gain[i] = std::pow(realization.member_distance(k, i), -params.alpha / 2.0);
  channel.theta.resize(static_cast<Eigen::Index>(n2), params.m);
  fill_unit_phases(channel.theta, engine);
  return channel;
}

double path_amplitude(Point a, Point b, double alpha) {
  const double d = distance(a, b);
  if (!(d > 0.0)) throw NumericalError("coincident positions give an unbounded path gain");
  return std::pow(d, -alpha / 2.0);
}

ScalarChannel sample_pair_channel(const NetworkRealization& realization, std::size_t tx, std::size_t rx,
                                  const NetworkParams& params, Engine& engine) {
  return sample_pair_channel(realization, tx, rx, params.alpha, engine);
}

ScalarChannel sample_pair_channel(const NetworkRealization& realization, std::size_t tx, std::size_t rx, double alpha,
                                  Engine& engine) {
  if (tx == rx) throw ParameterError("pair channel needs tx != rx");
  const auto dests = realization.destinations();
  const double amplitude = path_amplitude(dests[tx], dests[rx], alpha);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return {std::polar(amplitude, angle(engine))};
}

}  // namespace qfmimo
