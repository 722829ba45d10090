#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "qfmimo/linkrate.hpp"

using namespace qfmimo;

TEST_SUITE("linkrate") {
  TEST_CASE("scheduling sets for n2 = 3 and n2 = 2") {
    const auto three = build_scheduling_sets(3);
    REQUIRE(three.size() == 2);
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(three[0].pairs == std::vector<P>{{0, 1}, {1, 2}, {2, 0}});
    CHECK(three[1].pairs == std::vector<P>{{0, 2}, {1, 0}, {2, 1}});
    const auto two = build_scheduling_sets(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].pairs == std::vector<P>{{0, 1}, {1, 0}});
    CHECK(build_scheduling_sets(1).empty());
    CHECK_THROWS_AS(build_scheduling_sets(0), ParameterError);
  }

  TEST_CASE("scheduling sets are perfect matchings covering every ordered pair once, n2 <= 64") {
    for (std::size_t n2 = 2; n2 <= 64; ++n2) {
      const auto sets = build_scheduling_sets(n2);
      REQUIRE(sets.size() == n2 - 1);
      std::set<std::pair<std::size_t, std::size_t>> all;
      for (const auto& set : sets) {
        std::vector<int> tx(n2, 0), rx(n2, 0);
        for (auto [a, b] : set.pairs) {
          REQUIRE(a != b);
          ++tx[a];
          ++rx[b];
          all.emplace(a, b);
          REQUIRE(scheduling_set_of(a, b, n2) == set.index);
        }
        REQUIRE(std::all_of(tx.begin(), tx.end(), [](int c) { return c == 1; }));
        REQUIRE(std::all_of(rx.begin(), rx.end(), [](int c) { return c == 1; }));
      }
      REQUIRE(all.size() == n2 * (n2 - 1));
    }
  }

  TEST_CASE("zeta against closed forms and the brute-force oracle") {
    CHECK(std::abs(riemann_zeta(2.0) - std::numbers::pi * std::numbers::pi / 6.0) < 1e-12);
    CHECK(std::abs(riemann_zeta(3.0) - 1.2020569031595942) < 1e-12);
    for (double s : {1.5, 2.5, 3.0, 5.0, 7.0}) {
      const auto ref = oracle::zeta_brute_force(s, 2000000);
      REQUIRE(ref.half_width < 1e-9);
      CHECK(std::abs(riemann_zeta(s) - ref.value) < 1e-9 + ref.half_width);
    }
    CHECK_THROWS_AS(riemann_zeta(1.0), ParameterError);
    CHECK_THROWS_AS(riemann_zeta(0.5), ParameterError);
  }

  TEST_CASE("worst-case TDMA bound: direct evaluation and shape") {
    CHECK(tdma_worst_case_capacity(0.25, 4, 10.0, 4.0) == doctest::Approx(-1.316390948490542).epsilon(1e-12));
    const double a = tdma_worst_case_capacity(0.25, 4, 10.0, 4.0);
    const double b = tdma_worst_case_capacity(0.25, 8, 10.0, 4.0);
    CHECK(b == doctest::Approx(a / 2.0).epsilon(1e-14));
    double prev = tdma_worst_case_capacity(0.25, 4, 1e-2, 4.0);
    for (double p1 : {1e-3, 1e-5, 1e-8, 1e-12}) {
      const double v = tdma_worst_case_capacity(0.25, 4, p1, 4.0);
      CHECK(v < prev);
      prev = v;
    }
  }

  TEST_CASE("2^(alpha/2+3) zeta(alpha-1) > 1 on (2, 8], so the worst-case bound is negative") {
    for (double alpha = 2.05; alpha <= 8.0; alpha += 0.05) {
      CHECK(std::pow(2.0, alpha / 2.0 + 3.0) * riemann_zeta(alpha - 1.0) > 1.0);
      for (double p1 : {1e-3, 1.0, 1e3}) CHECK(tdma_worst_case_capacity(0.1, 3, p1, alpha) < 0.0);
    }
  }

  TEST_CASE("hier capacity") {
    CHECK(hier_capacity(1, 0.3, 2.5) == 2.5);
    CHECK(hier_capacity(1024, 0.1, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(hier_capacity(1000, 1e-12, 3.0) == doctest::Approx(3.0).epsilon(1e-9));
  }

  TEST_CASE("exact SINR: isolated group reduces to the interference-free closed form") {
    // 2x2 grid, one group occupied: no co-active groups exist.
    NetworkRealization r({{0.1, 0.1}, {0.2, 0.1}, {0.1, 0.3}, {0.3, 0.3}}, 2);
    REQUIRE(r.n1() == 1);
    LinkCapacityModel model;
    model.p1 = 1.0;
    model.alpha = 4.0;
    model.trials = 10;
    const std::size_t tx = r.rank_of(0), rx = r.rank_of(1);  // 0.1 apart
    CHECK(exact_sinr_capacity(r, 0, tx, rx, model, 1) == doctest::Approx(3.321964160460136).epsilon(1e-12));
    model.p1 = 0.0;
    CHECK(exact_sinr_capacity(r, 0, tx, rx, model, 1) == 0.0);
  }

  TEST_CASE("exact SINR: co-active interferers lower the capacity, never below zero") {
    // 3x3 grid: cells (0,0) and (0,2) share a 4-TDMA slot.
    NetworkRealization r({{0.1, 0.1}, {0.2, 0.15}, {0.8, 0.1}, {0.9, 0.2}}, 3);
    REQUIRE(r.n1() == 2);
    REQUIRE(co_active_groups(r, 0) == std::vector<std::size_t>{1});
    LinkCapacityModel model;
    model.alpha = 3.0;
    model.trials = 5;
    for (double p1 : {0.1, 1.0, 100.0}) {
      model.p1 = p1;
      const double with = exact_sinr_capacity(r, 0, 0, 1, model, 4);
      const double without = interference_free_capacity(r, 0, 0, 1, model, 4);
      CHECK(with >= 0.0);
      CHECK(with < without);
    }
    model.truncation_radius = 0.05;
    CHECK(exact_sinr_capacity(r, 0, 0, 1, model, 4) == interference_free_capacity(r, 0, 0, 1, model, 4));
  }

  TEST_CASE("rank matching clamps to the last member of a smaller group") {
    // Group 0 has 3 members, group 1 has 1: every rank of group 0 sees the same interferer.
    NetworkRealization r({{0.05, 0.05}, {0.1, 0.1}, {0.2, 0.2}, {0.85, 0.1}}, 3);
    LinkCapacityModel model;
    model.trials = 3;
    const double c = exact_sinr_capacity(r, 0, 2, 0, model, 8);
    const auto dests = r.destinations();
    const std::size_t tx = r.group(0).members[2], rx = r.group(0).members[0], intf = r.group(1).members[0];
    const double s = 1.0 / std::pow(distance(dests[tx], dests[rx]), 4.0);
    const double i = 1.0 / std::pow(distance(dests[intf], dests[rx]), 4.0);
    CHECK(c == doctest::Approx(std::log2(1.0 + s / (1.0 + i)) / 3.0).epsilon(1e-12));
  }

  TEST_CASE("invalid pairs are rejected") {
    NetworkRealization r({{0.1, 0.1}, {0.2, 0.2}}, 1);
    LinkCapacityModel model;
    CHECK_THROWS_AS(exact_sinr_capacity(r, 0, 1, 1, model, 1), ParameterError);
    CHECK_THROWS_AS(exact_sinr_capacity(r, 0, 0, 5, model, 1), ParameterError);
  }

  TEST_CASE("4-TDMA: co-active cells share a colour and are never adjacent") {
    NetworkParams p;
    p.m = 6;
    p.beta = 2.5;
    p.q = 0.7;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      p.seed = seed;
      const auto r = place_nodes(p);
      for (std::size_t k = 0; k < r.n1(); ++k) {
        const Group& a = r.group(k);
        for (std::size_t l : co_active_groups(r, k)) {
          const Group& b = r.group(l);
          CHECK(tdma_slot(a.cell_row, a.cell_col) == tdma_slot(b.cell_row, b.cell_col));
          CHECK(std::max(std::abs(a.cell_row - b.cell_row), std::abs(a.cell_col - b.cell_col)) >= 2);
        }
      }
    }
  }

  TEST_CASE("link_capacity dispatches on mode") {
    NetworkRealization r({{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.1}}, 1);
    LinkCapacityModel model;
    model.mode = LinkMode::hier;
    model.epsilon = 0.5;
    model.c2 = 2.0;
    CHECK(link_capacity(r, 0, 0, 1, model, 1) == doctest::Approx(2.0 / std::sqrt(3.0)));
    model.mode = LinkMode::tdma_worst_case;
    CHECK(link_capacity(r, 0, 0, 1, model, 1) == tdma_worst_case_capacity(1.0, 3, model.p1, model.alpha));
    model.mode = LinkMode::tdma_exact_sinr;
    CHECK(link_capacity(r, 0, 0, 1, model, 1) == exact_sinr_capacity(r, 0, 0, 1, model, 1));
  }
}
