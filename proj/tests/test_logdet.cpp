#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qfmimo/logdet.hpp"

using namespace qfmimo;

TEST_SUITE("logdet") {
  TEST_CASE("Gram-side log-det agrees with the LU oracle on both shapes") {
    Engine e(17);
    std::normal_distribution<double> g;
    for (auto [rows, cols] : {std::pair{3, 7}, std::pair{7, 3}, std::pair{5, 5}, std::pair{1, 9}}) {
      ComplexMatrix b(rows, cols);
      for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) b(i, j) = {g(e), g(e)};
      const Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(rows, rows) + b * b.adjoint();
      CHECK(log2_det_identity_plus_gram(b) == doctest::Approx(oracle::log2_abs_det_lu(full)).epsilon(1e-12));
    }
  }

  TEST_CASE("zero rows contribute nothing") {
    ComplexMatrix b = ComplexMatrix::Zero(4, 2);
    b(0, 0) = {1.0, 0.0};
    ComplexMatrix top = b.topRows(1);
    CHECK(log2_det_identity_plus_gram(b) == doctest::Approx(log2_det_identity_plus_gram(top)).epsilon(1e-14));
    CHECK(log2_det_identity_plus_gram(b) == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("serial and parallel kernels agree bit-for-bit at any worker count") {
    const std::vector<double> scale{0.3, 0.0, 1.2, 0.7, 0.5};
    const auto reference = log2det_trials_serial(scale, 6, 37, 12345);
    const int original = worker_count();
    for (int workers : {1, 2, 3, 8}) {
      set_worker_count(workers);
      const auto parallel = log2det_trials_parallel(scale, 6, 37, 12345);
      REQUIRE(parallel.size() == reference.size());
      for (std::size_t t = 0; t < reference.size(); ++t) CHECK(parallel[t] == reference[t]);
    }
    set_worker_count(original);
  }

  TEST_CASE("per-trial values match an independent evaluation of the drawn phases") {
    const std::vector<double> scale{0.4, 1.1, 0.9};
    const auto samples = log2det_trials_serial(scale, 4, 5, 777);
    for (int t = 0; t < 5; ++t) {
      Eigen::MatrixXcd theta = oracle::trial_phases(777, t, 3, 4);
      for (Eigen::Index r = 0; r < 3; ++r) theta.row(r) *= scale[static_cast<std::size_t>(r)];
      const Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(3, 3) + theta * theta.adjoint();
      CHECK(samples[static_cast<std::size_t>(t)] == doctest::Approx(oracle::log2_abs_det_lu(full)).epsilon(1e-12));
    }
  }

  TEST_CASE("summarize: mean and standard error") {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    const auto s = summarize(v);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
    CHECK(s.trials == 4);
    CHECK(summarize(std::vector<double>{3.0}).std_error == 0.0);
  }

  TEST_CASE("bad trial counts are rejected") {
    const std::vector<double> scale{1.0};
    CHECK_THROWS_AS(mc_log2det(scale, 1, 0, 1), ParameterError);
    CHECK_THROWS_AS(mc_log2det(scale, 0, 5, 1), ParameterError);
  }
}
