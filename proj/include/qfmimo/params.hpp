#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qfmimo {

/// Raised for any configuration or precondition violation. The CLI maps it to exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation cannot produce a finite answer (singular geometry,
/// failed factorization). The CLI maps it to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relaying scheme used among the pairs of a scheduling set in Phase 2.
enum class CooperationMode { tdma, hier };

std::string_view to_string(CooperationMode mode);
CooperationMode cooperation_mode_from_string(std::string_view text);

/// All scalar knobs of one run.
struct NetworkParams {
  int m = 4;                     // source antennas
  double beta = 3.0;             // n = m^beta
  double alpha = 4.0;            // path-loss exponent
  double p0 = 1.0;               // source power
  double p1 = 1.0;               // per-destination power
  double q = 0.5;                // cell area n^-q
  double delta = 0.5;            // Phase-1 time fraction
  CooperationMode mode = CooperationMode::tdma;
  double epsilon = 0.05;         // hierarchical exponent
  double c2 = 1.0;               // hierarchical rate constant
  double exclusion_radius = 0.1;
  std::uint64_t seed = 1;
  int trials = 200;
  int sample_size = 50;

  /// round(m^beta)
  [[nodiscard]] long long destination_count() const;

  /// Throws ParameterError naming the first violated invariant.
  void validate() const;
};

}  // namespace qfmimo
