#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qfmimo/netgeom.hpp"
#include "qfmimo/params.hpp"

namespace qfmimo {

/// Directed relay pairs (tx rank, rx rank) inside one group. Each rank appears
/// once as transmitter and once as receiver.
struct SchedulingSet {
  std::size_t index = 0;  // 1-based shift s
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

enum class LinkMode { tdma_worst_case, tdma_exact_sinr, hier };

struct LinkCapacityModel {
  LinkMode mode = LinkMode::tdma_exact_sinr;
  double p1 = 1.0;
  double alpha = 4.0;
  double epsilon = 0.05;
  double c2 = 1.0;
  /// Interferers farther than this from the receiver are ignored; 0 disables truncation.
  double truncation_radius = 0.0;
  int trials = 200;

  /// tdma -> tdma_exact_sinr, hier -> hier.
  static LinkCapacityModel from_params(const NetworkParams& params);
};

/// Round-robin construction: set s pairs rank i with rank (i + s) mod n2.
/// Returns an empty sequence for n2 == 1; throws for n2 == 0.
std::vector<SchedulingSet> build_scheduling_sets(std::size_t n2);

/// Shift of the scheduling set holding the ordered pair (tx, rx).
std::size_t scheduling_set_of(std::size_t tx, std::size_t rx, std::size_t n2);

/// Sum of i^-s for s > 1, partial sum plus Euler-Maclaurin tail; error < 1e-9.
double riemann_zeta(double s);

/// 4-TDMA colour of a cell, in [0, 4).
constexpr int tdma_slot(int cell_row, int cell_col) { return (cell_row % 2) * 2 + (cell_col % 2); }

/// Nonempty groups sharing the 4-TDMA slot of group k, k itself excluded.
std::vector<std::size_t> co_active_groups(const NetworkRealization& realization, std::size_t k);

/// Displayed worst-case TDMA bound:
/// (1/n2) log2( p1 / ((sqrt2 d)^alpha + 2^(alpha/2+3) p1 zeta(alpha-1)) ).
/// Negative for every admissible input; kept as a diagnostic.
double tdma_worst_case_capacity(double cell_side, std::size_t n2, double p1, double alpha);

/// Exact-geometry capacity of relay link tx_rank -> rx_rank in group k under
/// 4-TDMA with in-set TDMA (factor 1/n2). Interferers are the rank-matched
/// transmitters (clamped to the last member) of every co-active group.
double exact_sinr_capacity(const NetworkRealization& realization, std::size_t k, std::size_t tx_rank,
                           std::size_t rx_rank, const LinkCapacityModel& model, std::uint64_t seed);

/// Same as exact_sinr_capacity but with interference switched off.
double interference_free_capacity(const NetworkRealization& realization, std::size_t k, std::size_t tx_rank,
                                  std::size_t rx_rank, const LinkCapacityModel& model, std::uint64_t seed);

/// c2 * n2^-epsilon.
double hier_capacity(std::size_t n2, double epsilon, double c2);

/// C(k, tx, rx) under the model's mode.
double link_capacity(const NetworkRealization& realization, std::size_t k, std::size_t tx_rank, std::size_t rx_rank,
                     const LinkCapacityModel& model, std::uint64_t seed);

}  // namespace qfmimo
