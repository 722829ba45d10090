#pragma once

#include <cstdint>
#include <string_view>

#include "qfmimo/logdet.hpp"
#include "qfmimo/netgeom.hpp"
#include "qfmimo/params.hpp"

namespace qfmimo {

enum class CutsetBranch { dense, sparse };  // beta > 1, beta <= 1

struct UpperBoundReport {
  CutsetBranch branch = CutsetBranch::dense;
  double bound = 0.0;         // bits/s/Hz
  double distance_sum = 0.0;  // sum_i ||r0 - ri||^-alpha
};

/// Cut-set bound on the sum-rate. beta > 1: m log2(1 + (p0/m) sum d^-alpha);
/// beta <= 1: sum_i log2(1 + p0 m d_i^-alpha).
UpperBoundReport cutset_upper_bound(const NetworkRealization& realization, const NetworkParams& params);

/// E log2 det(I + (p/m) T T^H) with T an n_rx x m unit-modulus i.i.d. phase matrix.
MonteCarloEstimate mimo_ergodic_capacity_mc(int n_rx, int m, double p, int trials, std::uint64_t seed,
                                            Execution exec = Execution::parallel);

/// Large-system limits of capacity per receive antenna as a function of a = M/N.
enum class AspectRegime { wide, square, narrow };  // a -> inf, a -> 1, a -> 0

AspectRegime aspect_regime_from_string(std::string_view tag);

/// Closed-form per-receive-antenna capacity (bits). `a` is only read in the
/// narrow regime, where the leading term a log2(p/a) is returned.
double lozano_regime_value(AspectRegime regime, double p, double a = 0.0);

}  // namespace qfmimo
