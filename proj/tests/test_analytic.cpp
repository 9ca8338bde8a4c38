#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "dhtcost/analytic.hpp"
#include "dhtcost/engine.hpp"
#include "dhtcost/error.hpp"
#include "dhtcost/topology.hpp"
#include "oracles.hpp"

using namespace dhtcost;
using namespace dhtcost::analytic;

TEST_CASE("star costs: examples") {
  const CostParams access_only{0, 1, 0, 0};
  const auto c4 = star_costs(4, access_only);
  CHECK(c4.center_cost == doctest::Approx(0.75));
  CHECK(c4.peripheral_cost == doctest::Approx(1.25));

  const CostParams p{2, 3, 5, 7};
  const double n = 6;
  const auto c = star_costs(6, p);
  CHECK(c.center_cost ==
        doctest::Approx(7 * (n - 1) + 2 / n + 3 * (n - 1) / n + 5 * (n - 1) * (n - 2) / (n * n)));
  CHECK(c.peripheral_cost == doctest::Approx(7 + (2 + 3 * (2 * n - 3)) / n));

  const auto b = star_breakdown(6, p);
  CHECK(total_cost(b.center) == doctest::Approx(c.center_cost));
  CHECK(total_cost(b.peripheral) == doctest::Approx(c.peripheral_cost));
  CHECK(b.peripheral.routing == 0.0);
  CHECK(b.center.maintenance == 35.0);

  CHECK_THROWS_AS(star_costs(1, p), InvalidParameter);
  CHECK_THROWS_AS((star_costs(5, CostParams{-1, 0, 0, 0})), InvalidParameter);
}

TEST_CASE("star cost gap polynomial equals N^2 (C_0 - C_i) over a parameter grid") {
  for (double s : {0.0, 1.0, 4.0}) {
    for (double a : {0.0, 1.0, 2.5}) {
      for (double r : {0.0, 1.0, 1000.0}) {
        for (double m : {0.0, 0.1, 3.0}) {
          const CostParams p{s, a, r, m};
          for (std::uint64_t n : {2u, 3u, 4u, 10u, 57u, 1000u}) {
            const auto c = star_costs(n, p);
            const double nn = static_cast<double>(n);
            const double gap = nn * nn * (c.center_cost - c.peripheral_cost);
            const double poly = star_cost_gap_polynomial(n, p);
            CHECK(poly == doctest::Approx(gap).epsilon(1e-9).scale(1.0));
            CHECK(poly == doctest::Approx((nn - 2) * (m * nn * nn - (a - r) * nn - r))
                               .epsilon(1e-12)
                               .scale(1.0));
          }
          CHECK(star_cost_gap_polynomial(2, p) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("equilibrium size: examples") {
  const auto e = star_equilibrium_size(CostParams{0, 5, 2, 1});
  CHECK(e.kind == EquilibriumSize::Kind::Candidate);
  CHECK(e.n0_real == doctest::Approx(3.5615528128));
  CHECK_FALSE(e.is_integer);
  CHECK_FALSE(e.integer_n0().has_value());

  const auto all = star_equilibrium_size(CostParams{9, 0, 0, 0});
  CHECK(all.kind == EquilibriumSize::Kind::AllN);

  // m = 0: r / (r - a)
  const auto lin = star_equilibrium_size(CostParams{0, 2, 4, 0});
  CHECK(lin.kind == EquilibriumSize::Kind::Candidate);
  CHECK(lin.n0_real == doctest::Approx(2.0));
  CHECK(lin.integer_n0() == 2u);
  const auto lin3 = star_equilibrium_size(CostParams{0, 2, 3, 0});
  CHECK(lin3.integer_n0() == 3u);
  CHECK(star_equilibrium_size(CostParams{0, 1, 1, 0}).kind ==
        EquilibriumSize::Kind::NoneBesidesTwo);
  CHECK(star_equilibrium_size(CostParams{0, 3, 1, 0}).kind ==
        EquilibriumSize::Kind::NoneBesidesTwo);
  CHECK(star_equilibrium_size(CostParams{0, 0, 0, 1}).kind ==
        EquilibriumSize::Kind::NoneBesidesTwo);

  // m N^2 - (a - r) N - r = 2N^2 - 18N - 20 = 2(N - 10)(N + 1)
  const auto ten = star_equilibrium_size(CostParams{0, 10, 1, 0.5});
  // 0.5 N^2 - 9N - 1: not integral
  CHECK_FALSE(ten.is_integer);
  const auto exact = star_equilibrium_size(CostParams{0, 19, 10, 1});
  CHECK(exact.integer_n0() == 10u);

  CHECK(std::string(to_string(EquilibriumSize::Kind::AllN)) == "all_n");
  CHECK(std::string(to_string(EquilibriumSize::Kind::NoneBesidesTwo)) == "none_besides_two");
  CHECK(std::string(to_string(EquilibriumSize::Kind::Candidate)) == "candidate");
  CHECK_THROWS_AS((star_equilibrium_size(CostParams{0, -1, 0, 0})), InvalidParameter);
}

TEST_CASE("equilibrium size agrees with a brute-force search for equal star costs") {
  for (double m : {0.0, 0.5, 1.0, 2.0}) {
    for (int ai = 0; ai <= 12; ++ai) {
      for (int ri = 0; ri <= 12; ++ri) {
        const CostParams p{1.0, static_cast<double>(ai), static_cast<double>(ri), m};
        CAPTURE(p.a);
        CAPTURE(p.r);
        CAPTURE(p.m);
        std::set<std::uint64_t> zeros;
        for (std::uint64_t n = 3; n <= 200; ++n) {
          const double nn = static_cast<double>(n);
          const double scale =
              (nn - 2) * (m * nn * nn + std::abs(p.a - p.r) * nn + p.r) + 1.0;
          if (std::abs(star_cost_gap_polynomial(n, p)) <= 1e-9 * scale) zeros.insert(n);
        }
        const auto e = star_equilibrium_size(p);
        if (e.kind == EquilibriumSize::Kind::AllN) {
          CHECK(zeros.size() == 198);
        } else if (e.kind == EquilibriumSize::Kind::NoneBesidesTwo) {
          CHECK(zeros.empty());
        } else if (e.is_integer && *e.integer_n0() >= 3) {
          CHECK(zeros == std::set<std::uint64_t>{*e.integer_n0()});
        } else {
          CHECK(zeros.empty());
        }
        // Whatever the classification, the root zeroes the quadratic factor.
        if (e.kind == EquilibriumSize::Kind::Candidate) {
          const double x = e.n0_real;
          CHECK(m * x * x - (p.a - p.r) * x - p.r == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("de Bruijn l_max: examples and the explicit sum") {
  CHECK(debruijn_l_max(5, 4) == 2147);
  CHECK(debruijn_l_max(2, 9) == 7164);
  CHECK(debruijn_l_max(2, 1) == 0);
  for (std::uint32_t delta = 2; delta <= 12; ++delta) {
    for (std::uint32_t d = 1; d <= 8; ++d) {
      CHECK(debruijn_l_max(delta, d) == oracle::debruijn_l_max_sum(delta, d));
    }
  }
  CHECK_THROWS_AS(debruijn_l_max(1000, 12), ResourceLimit);
  CHECK_THROWS_AS(debruijn_l_max(1, 3), InvalidParameter);
}

TEST_CASE("de Bruijn bounds: examples") {
  const CostParams p{0, 1, 1000, 0};
  const auto b = debruijn_bounds(2, 9, p);
  CHECK(b.a_min == doctest::Approx(3595.0 / 512.0));
  CHECK(std::round(b.a_min * 100) / 100 == doctest::Approx(7.02));
  CHECK(b.a_max == doctest::Approx(4097.0 / 512.0));
  CHECK(b.l_max == 7164);
  CHECK(b.r_max == doctest::Approx(1000.0 * 7164 / (512.0 * 512.0)));

  const auto b54 = debruijn_bounds(5, 4, p);
  CHECK(b54.l_max == 2147);
  CHECK(b54.r_max == doctest::Approx(1000.0 * 2147 / 390625.0));
  // (4*625*16 + 4*4 - 5*624) / 16 / 625
  CHECK(b54.a_min == doctest::Approx((4.0 * 625 * 16 + 16 - 5 * 624) / 16.0 / 625.0));
  // (4*3125 - 5*625 + 1) / (625*4)
  CHECK(b54.a_max == doctest::Approx((4.0 * 3125 - 5 * 625 + 1) / 2500.0));
}

TEST_CASE("de Bruijn bound ordering") {
  const CostParams p{0, 1, 1, 0};
  for (std::uint32_t delta = 2; delta <= 9; ++delta) {
    for (std::uint32_t d = 1; d <= 6; ++d) {
      const auto b = debruijn_bounds(delta, d, p);
      CHECK(b.a_min <= b.a_max + 1e-12);
      CHECK(b.a_max <= static_cast<double>(d));
      CHECK(b.a_min >= 0.0);
    }
  }
}

TEST_CASE("torus loading: closed form, recursion and brute force agree") {
  CHECK(torus_ring_loading(5) == 2);
  CHECK(torus_ring_loading(4) == 1);
  CHECK(torus_ring_loading(3) == 0);
  CHECK(torus_ring_loading(2) == 0);
  CHECK_THROWS_AS(torus_ring_loading(1), InvalidParameter);
  CHECK(torus_loading(2, 3) == 4);
  CHECK(torus_loading(2, 5) == 36);
  CHECK(torus_loading(3, 5) == 326);

  for (std::uint32_t d = 1; d <= 6; ++d) {
    for (std::uint32_t n = 2; n <= 12; ++n) {
      CHECK(torus_loading(d, n) == oracle::torus_loading_recursive(d, n));
    }
  }
  for (const auto& [d, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {1, 2}, {1, 7}, {1, 8}, {2, 3}, {2, 4}, {2, 6}, {3, 3}, {3, 4}, {3, 5}, {4, 3}}) {
    CAPTURE(d);
    CAPTURE(n);
    const auto topo = build(Torus{d, n});
    const auto counts = oracle::counts(topo);
    for (auto l : counts.loading) REQUIRE(l == torus_loading(d, n));
  }
}

TEST_CASE("torus costs") {
  const auto c = torus_costs(2, 3, CostParams{0, 1, 1000, 0});
  CHECK(c.access == doctest::Approx(1.5));
  CHECK(c.routing == doctest::Approx(1000.0 * 4 / 81));
  const auto c3 = torus_costs(3, 10, CostParams{0, 2, 1, 0});
  CHECK(c3.access == doctest::Approx(2 * 0.75 * 10));
  CHECK_THROWS_AS((torus_costs(3, 2, CostParams{0, 1, 1, 0})), Unsupported);
}

TEST_CASE("Plaxton distance distribution") {
  const auto counts = plaxton_distance_counts(3, 4);
  CHECK(counts == std::vector<std::uint64_t>{1, 8, 24, 32, 16});
  for (std::uint32_t delta = 2; delta <= 9; ++delta) {
    for (std::uint32_t d = 1; d <= 6; ++d) {
      const auto pmf = plaxton_distance_pmf(delta, d);
      CHECK(pmf.size() == d + 1);
      CHECK(std::accumulate(pmf.begin(), pmf.end(), 0.0) == doctest::Approx(1.0));
      double mean = 0;
      for (std::size_t k = 0; k < pmf.size(); ++k) mean += static_cast<double>(k) * pmf[k];
      CHECK(mean == doctest::Approx(d * (delta - 1.0) / delta));
    }
  }
}

TEST_CASE("Plaxton and Chord closed forms") {
  CHECK(plaxton_loading(2, 3) == 5);
  CHECK(plaxton_loading(2, 1) == 0);
  CHECK(plaxton_loading(3, 1) == 0);
  const auto c = plaxton_costs(2, 3, CostParams{0, 1, 1, 0});
  CHECK(c.access == doctest::Approx(1.5));
  CHECK(c.routing == doctest::Approx(5.0 / 64));

  for (std::uint32_t delta = 2; delta <= 5; ++delta) {
    for (std::uint32_t d = 1; d <= 4; ++d) {
      const auto counts = oracle::counts(build(PlaxtonTree{delta, d}));
      for (auto l : counts.loading) REQUIRE(l == plaxton_loading(delta, d));
    }
  }
  for (std::uint32_t d = 1; d <= 12; ++d) {
    const CostParams p{1, 3, 100, 2};
    const auto chord = chord_costs(d, p);
    const auto plax = plaxton_costs(2, d, p);
    CHECK(chord.access == plax.access);
    CHECK(chord.routing == plax.routing);
  }
}
