#include "qfmimo/linkrate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qfmimo/channel.hpp"
#include "qfmimo/rng.hpp"

namespace qfmimo {

LinkCapacityModel LinkCapacityModel::from_params(const NetworkParams& params) {
  LinkCapacityModel model;
  model.mode = params.mode == CooperationMode::hier ? LinkMode::hier : LinkMode::tdma_exact_sinr;
  model.p1 = params.p1;
  model.alpha = params.alpha;
  model.epsilon = params.epsilon;
  model.c2 = params.c2;
  model.trials = params.trials;
  return model;
}

std::vector<SchedulingSet> build_scheduling_sets(std::size_t n2) {
  if (n2 == 0) throw ParameterError("scheduling sets need n2 >= 1");
  std::vector<SchedulingSet> sets;
  sets.reserve(n2 - 1);
  for (std::size_t s = 1; s < n2; ++s) {
    SchedulingSet set{s, {}};
    set.pairs.reserve(n2);
    for (std::size_t i = 0; i < n2; ++i) set.pairs.emplace_back(i, (i + s) % n2);
    sets.push_back(std::move(set));
  }
  return sets;
}

std::size_t scheduling_set_of(std::size_t tx, std::size_t rx, std::size_t n2) {
  if (tx >= n2 || rx >= n2 || tx == rx) throw ParameterError("pair is not in any scheduling set");
  return (rx + n2 - tx) % n2;
}

double riemann_zeta(double s) {
  if (!(s > 1.0)) throw ParameterError("zeta(s) diverges for s <= 1");
  // Direct sum below K, then the Euler-Maclaurin tail through the B4 term.
  // The first omitted term is O(s^5 K^(-s-5)), below 1e-12 for K = 64.
  constexpr int kCutoff = 64;
  double partial = 0.0;
  for (int i = kCutoff - 1; i >= 1; --i) partial += std::pow(static_cast<double>(i), -s);
  const double k = kCutoff;
  const double ks = std::pow(k, -s);
  const double tail = k * ks / (s - 1.0) + 0.5 * ks + s * ks / (12.0 * k) -
                      s * (s + 1.0) * (s + 2.0) * ks / (720.0 * k * k * k);
  return partial + tail;
}

std::vector<std::size_t> co_active_groups(const NetworkRealization& realization, std::size_t k) {
  const Group& self = realization.group(k);
  const int slot = tdma_slot(self.cell_row, self.cell_col);
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < realization.n1(); ++l) {
    if (l == k) continue;
    const Group& other = realization.group(l);
    if (tdma_slot(other.cell_row, other.cell_col) == slot) out.push_back(l);
  }
  return out;
}

double tdma_worst_case_capacity(double cell_side, std::size_t n2, double p1, double alpha) {
  if (!(cell_side > 0.0)) throw ParameterError("cell side must be > 0");
  if (!(alpha > 2.0)) throw ParameterError("alpha must be > 2");
  if (n2 == 0) throw ParameterError("n2 must be >= 1");
  const double near = std::pow(std::numbers::sqrt2 * cell_side, alpha);
  const double interference = std::pow(2.0, alpha / 2.0 + 3.0) * p1 * riemann_zeta(alpha - 1.0);
  return std::log2(p1 / (near + interference)) / static_cast<double>(n2);
}

namespace {

double sinr_capacity(const NetworkRealization& realization, std::size_t k, std::size_t tx_rank, std::size_t rx_rank,
                     const LinkCapacityModel& model, std::uint64_t seed, bool with_interference) {
  const Group& group = realization.group(k);
  const std::size_t n2 = group.size();
  scheduling_set_of(tx_rank, rx_rank, n2);
  if (model.trials < 1) throw ParameterError("trials must be >= 1");
  if (model.p1 <= 0.0) return 0.0;

  const std::size_t tx = group.members[tx_rank];
  const std::size_t rx = group.members[rx_rank];
  const Point rx_pos = realization.destinations()[rx];

  std::vector<std::size_t> interferers;
  if (with_interference) {
    for (std::size_t l : co_active_groups(realization, k)) {
      const Group& other = realization.group(l);
      const std::size_t who = other.members[std::min(tx_rank, other.size() - 1)];
      if (model.truncation_radius > 0.0 &&
          distance(realization.destinations()[who], rx_pos) > model.truncation_radius)
        continue;
      interferers.push_back(who);
    }
  }

  Engine engine = make_engine(seed, {key(StreamTag::phase2), k, tx_rank, rx_rank});
  double acc = 0.0;
  for (int t = 0; t < model.trials; ++t) {
    const double signal = std::norm(sample_pair_channel(realization, tx, rx, model.alpha, engine).value);
    double interference = 0.0;
    for (std::size_t who : interferers)
      interference += std::norm(sample_pair_channel(realization, who, rx, model.alpha, engine).value);
    const double sinr = model.p1 * signal / (1.0 + model.p1 * interference);
    acc += std::log2(1.0 + sinr);
  }
  return acc / static_cast<double>(model.trials) / static_cast<double>(n2);
}

}  // namespace

double exact_sinr_capacity(const NetworkRealization& realization, std::size_t k, std::size_t tx_rank,
                           std::size_t rx_rank, const LinkCapacityModel& model, std::uint64_t seed) {
  return sinr_capacity(realization, k, tx_rank, rx_rank, model, seed, true);
}

double interference_free_capacity(const NetworkRealization& realization, std::size_t k, std::size_t tx_rank,
                                  std::size_t rx_rank, const LinkCapacityModel& model, std::uint64_t seed) {
  return sinr_capacity(realization, k, tx_rank, rx_rank, model, seed, false);
}

double hier_capacity(std::size_t n2, double epsilon, double c2) {
  if (n2 == 0) throw ParameterError("n2 must be >= 1");
  return c2 * std::pow(static_cast<double>(n2), -epsilon);
}

double link_capacity(const NetworkRealization& realization, std::size_t k, std::size_t tx_rank, std::size_t rx_rank,
                     const LinkCapacityModel& model, std::uint64_t seed) {
  const std::size_t n2 = realization.n2_of(k);
  switch (model.mode) {
    case LinkMode::tdma_worst_case:
      scheduling_set_of(tx_rank, rx_rank, n2);
      return tdma_worst_case_capacity(realization.cell_side(), n2, model.p1, model.alpha);
    case LinkMode::tdma_exact_sinr:
      return exact_sinr_capacity(realization, k, tx_rank, rx_rank, model, seed);
    case LinkMode::hier:
      scheduling_set_of(tx_rank, rx_rank, n2);
      return hier_capacity(n2, model.epsilon, model.c2);
  }
  throw ParameterError("unknown link mode");
}

}  // namespace qfmimo
