#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qfmimo/netgeom.hpp"
#include "qfmimo/params.hpp"
#include "qfmimo/rng.hpp"

namespace qfmimo {

using ComplexMatrix = Eigen::MatrixXcd;

/// Source-to-group channel split into a deterministic path-loss part and a
/// unit-modulus phase part. Row i of the physical channel equals
/// path_gain[i] * theta.row(i).
struct GroupChannel {
  std::size_t group = 0;
  std::vector<double> gamma;      // (d(k,n2) / d(k,i))^(alpha/2), >= 1, last entry 1
  ComplexMatrix theta;            // n2 x m, |entry| == 1
  std::vector<double> path_gain;  // d(k,i)^(-alpha/2)

  [[nodiscard]] Eigen::RowVectorXcd channel_row(std::size_t i) const {
    return path_gain.at(i) * theta.row(static_cast<Eigen::Index>(i));
  }
};

struct ScalarChannel {
  std::complex<double> value;

  [[nodiscard]] double magnitude() const { return std::abs(value); }
};

/// Overwrites every entry with e^{j*phi}, phi ~ U[0, 2*pi), in column-major order.
void fill_unit_phases(ComplexMatrix& theta, Engine& engine);

/// The Gamma diagonal of group k.
std::vector<double> group_gamma(const NetworkRealization& realization, std::size_t k, double alpha);

/// Fresh phases on every call (fast fading); magnitudes depend only on geometry.
GroupChannel sample_group_channel(const NetworkRealization& realization, std::size_t k,
                                  const NetworkParams& params, Engine& engine);

/// ||a - b||^(-alpha/2). Throws NumericalError for coincident points.
double path_amplitude(Point a, Point b, double alpha);

/// Destination-to-destination channel. Throws ParameterError if tx == rx and
/// NumericalError if the two positions coincide.
ScalarChannel sample_pair_channel(const NetworkRealization& realization, std::size_t tx, std::size_t rx,
                                  const NetworkParams& params, Engine& engine);
ScalarChannel sample_pair_channel(const NetworkRealization& realization, std::size_t tx, std::size_t rx, double alpha,
                                  Engine& engine);

}  // namespace qfmimo
