#include "qfmimo/params.hpp"

#include <cmath>

namespace qfmimo {

std::string_view to_string(CooperationMode mode) {
  return mode == CooperationMode::tdma ? "tdma" : "hier";
}

CooperationMode cooperation_mode_from_string(std::string_view text) {
  if (text == "tdma") return CooperationMode::tdma;
  if (text == "hier") return CooperationMode::hier;
  throw ParameterError("unknown mode '" + std::string(text) + "' (expected tdma or hier)");
}

long long NetworkParams::destination_count() const {
  return std::llround(std::pow(static_cast<double>(m), beta));
}

namespace {

bool inside_unit_interval(double v) { return v > 0.0 && v < 1.0; }

}  // namespace

void NetworkParams::validate() const {
  if (m < 1) throw ParameterError("m must be a positive integer");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ParameterError("beta must be > 0");
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw ParameterError("alpha must be > 2");
  if (!(p0 > 0.0)) throw ParameterError("p0 must be > 0");
  if (!(p1 > 0.0)) throw ParameterError("p1 must be > 0");
  if (!inside_unit_interval(q)) throw ParameterError("q must lie in (0,1)");
  if (!inside_unit_interval(delta)) throw ParameterError("delta must lie in (0,1)");
  if (!inside_unit_interval(epsilon)) throw ParameterError("epsilon must lie in (0,1)");
  if (!(c2 > 0.0)) throw ParameterError("c2 must be > 0");
  if (!(exclusion_radius >= 0.0)) throw ParameterError("exclusion_radius must be >= 0");
  if (exclusion_radius >= 0.7) throw ParameterError("exclusion_radius >= 0.7 leaves no room in the unit square");
  if (trials < 1) throw ParameterError("trials must be >= 1");
  if (sample_size < 1) throw ParameterError("sample_size must be >= 1");
  if (destination_count() < 1) throw ParameterError("round(m^beta) must be >= 1");
}

}  // namespace qfmimo
