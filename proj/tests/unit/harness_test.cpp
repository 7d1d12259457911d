#include "fracheat/error.hpp"
#include "fracheat/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fracheat;

namespace {

RatioCell cell(double ratio, bool noisy = false, bool near = false) {
  RatioCell c;
  c.t = 1.0;
  c.x = make_point({0.0});
  c.y = make_point({0.5});
  c.ratio = ratio;
  c.noisy = noisy;
  c.near_boundary = near;
  return c;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("quadrature helpers") {
  const StableParams p(2, 1.2);
  CHECK(ball_poisson_mass(p, make_point({0.3, 0.4}), 1.0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(ball_green_mass(p, make_point({0.3, 0.4})) ==
        doctest::Approx(expected_exit_time_ball(p, Point::Zero(2), 1.0, make_point({0.3, 0.4}))).epsilon(1e-8));
  CHECK(levy_symbol_quadrature(p, 1.5) == doctest::Approx(std::pow(1.5, 1.2)).epsilon(1e-5));
  CHECK(stable_density_mass(StableParams(3, 0.9)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("identity suite passes") {
  for (auto [d, a] : {std::pair{1, 1.0}, std::pair{3, 1.5}}) {
    const IdentityReport rep = verify_identities(StableParams(d, a));
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.pass());
    CHECK(rep.checks.size() >= 10);
  }
}

TEST_CASE("summaries") {
  RatioReport r;
  r.kind = "profile";
  r.cells = {cell(0.5), cell(2.0), cell(1.0, false, true), cell(100.0, true), cell(1.5)};
  r.cells[4].outside_range = true;
  summarize(r);
  CHECK(r.min_ratio == 0.5);
  CHECK(r.max_ratio == 2.0);
  CHECK(r.empirical_C == 2.0);
  CHECK(r.stderr_flags == 1);
  CHECK(r.outside_range == 1);
  CHECK(r.q50 == doctest::Approx(1.0));
  CHECK(r.finite());
  CHECK(r.boundary_ok());
  r.empirical_C_half = 2.2;
  CHECK(r.stable());
  r.empirical_C_half = 2.4;
  CHECK_FALSE(r.stable());

  // Boundary cells are compared with the median of their own time slice.
  RatioReport s;
  s.kind = "factorization";
  s.cells = {cell(1.0), cell(1.2), cell(2.2, false, true)};
  for (double r : {8.0, 9.0, 15.0}) {
    s.cells.push_back(cell(r, false, r > 10.0));
    s.cells.back().t = 4.0;
  }
  summarize(s);
  CHECK(*s.near_boundary_q95 > 2.0 * s.q50);
  CHECK(s.boundary_factor == doctest::Approx(2.2 / 1.2));
  CHECK(s.boundary_ok());
  s.cells[2].ratio = 5.0;
  summarize(s);
  CHECK(s.boundary_factor == doctest::Approx(5.0 / 1.2));
  CHECK_FALSE(s.boundary_ok());

  // A bracket cell counts the lower comparator too.
  RatioReport b;
  b.kind = "profile";
  b.cells = {cell(0.9)};
  b.cells[0].lower_ratio = 4.0 / 3.0;
  b.cells[0].ratio = 0.2;
  summarize(b);
  CHECK(b.empirical_C == doctest::Approx(1.0));
  b.cells[0].lower_ratio = 0.25;
  summarize(b);
  CHECK(b.empirical_C == doctest::Approx(4.0));
}

TEST_CASE("noisy sweeps are inconclusive") {
  const StableParams p(1, 1.0);
  SweepConfig cfg;
  cfg.times = {0.5};
  cfg.points = {make_point({0.3}), make_point({0.5})};
  cfg.n = 50;
  cfg.noise_threshold = 0.01;
  try {
    profile_sweep(Domain::half_space(1), p, cfg);
    FAIL("expected an inconclusive report");
  } catch (const InconclusiveReport& e) {
    CHECK(e.required_n() > cfg.n);
  }
}

TEST_CASE("half-space factorization is scale covariant") {
  const StableParams p(1, 1.0);
  SweepConfig a;
  a.times = {1.0};
  a.points = {make_point({0.5}), make_point({1.0}), make_point({2.0})};
  a.n = 2000;
  a.seed = 4;
  a.step.h = 1.0 / 64;
  a.n_doubling = false;
  SweepConfig b = a;
  const double r = 3.0;
  b.times = {r * a.times[0]};
  for (auto& x : b.points) x *= r;
  b.step.h = r * a.step.h;
  const RatioReport ra = factorization_sweep(Domain::half_space(1), p, a);
  const RatioReport rb = factorization_sweep(Domain::half_space(1), p, b);
  // Same streams: the scaled sweep is a pathwise copy, equal up to rounding.
  REQUIRE(ra.cells.size() == rb.cells.size());
  for (std::size_t i = 0; i < ra.cells.size(); ++i) {
    CHECK(rb.cells[i].ratio == doctest::Approx(ra.cells[i].ratio).epsilon(1e-9));
  }
}

TEST_CASE("half-plane cone and half-space profiles coincide") {
  const StableParams p(2, 1.0);
  SweepConfig c;
  c.times = {0.5, 4.0};
  c.points = {make_point({0.3, 0.2}), make_point({-1.0, 1.5})};
  c.n = 4000;
  c.step.h = 1.0 / 64;
  c.n_doubling = false;
  const RatioReport cone = profile_sweep(Domain::cone(2, std::numbers::pi / 2.0), p, c);
  c.seed = 2;
  const RatioReport half = profile_sweep(Domain::half_space(2), p, c);
  REQUIRE(cone.cells.size() == half.cells.size());
  for (std::size_t i = 0; i < cone.cells.size(); ++i) {
    const auto &a = cone.cells[i], &b = half.cells[i];
    CHECK(std::abs(a.ratio - b.ratio) <= 3.0 * std::hypot(a.std_err, b.std_err));
  }
}

TEST_CASE("interval BHP configurations") {
  const StableParams p(1, 1.0);
  const BhpConfiguration c = interval_bhp_configuration(0.5);
  CHECK(c.x1(0) == doctest::Approx(1.25));
  CHECK(c.x2(0) == doctest::Approx(1.05));
  CHECK(c.target1(make_point({3.0})));
  CHECK_FALSE(c.target1(make_point({-3.0})));
  CHECK(c.target2(make_point({-3.0})));
  BhpConfiguration same = c;
  same.x2 = same.x1;
  CHECK(interval_bhp_exact(p, same, {2.5, 4.0}, {-INFINITY, -2.0}) == doctest::Approx(1.0).epsilon(1e-12));
  const double exact = interval_bhp_exact(p, c, {2.5, 4.0}, {-INFINITY, -2.0});
  CHECK(std::isfinite(exact));
  CHECK(exact > 0.0);
  const RatioReport rep = bhp_sweep({same}, p, 2000, 3);
  CHECK(rep.cells.at(0).ratio == 1.0);
}

}  // TEST_SUITE
