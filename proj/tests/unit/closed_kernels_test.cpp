#include "fracheat/closed_kernels.hpp"
#include "fracheat/error.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fracheat;
using std::numbers::pi;

namespace {

Point p1(double v) { return make_point({v}); }

// d = 1, alpha = 1 Green function of (-1, 1) in elementary form.
double cauchy_green(double x, double v) {
  return std::log((1.0 - x * v + std::sqrt((1.0 - x * x) * (1.0 - v * v))) / std::abs(x - v)) / pi;
}

}  // namespace

TEST_SUITE("closed_kernels") {

TEST_CASE("ball Green function") {
  const StableParams p(1, 1.0);
  CHECK(ball_green(p, p1(0), 1.0, p1(0), p1(0.5)) == doctest::Approx(std::log(std::sqrt(3.0) + 2.0) / pi).epsilon(1e-10));
  CHECK(ball_green(p, p1(0), 1.0, p1(0), p1(0.5)) == doctest::Approx(0.4192007).epsilon(1e-7));
  for (double x : {-0.8, 0.1, 0.6}) {
    for (double v : {-0.3, 0.45, 0.95}) {
      CHECK(ball_green(p, p1(0), 1.0, p1(x), p1(v)) == doctest::Approx(cauchy_green(x, v)).epsilon(1e-10));
    }
  }
  // Scaling: G_{rB}(rx, rv) = r^{alpha-d} G_B(x, v).
  const StableParams q(3, 0.7);
  const Point x = make_point({0.1, 0.2, -0.3}), v = make_point({-0.4, 0.0, 0.5});
  CHECK(ball_green(q, Point::Zero(3), 2.0, 2.0 * x, 2.0 * v) ==
        doctest::Approx(std::pow(2.0, 0.7 - 3.0) * ball_green(q, Point::Zero(3), 1.0, x, v)).epsilon(1e-10));
  CHECK(ball_green(q, Point::Zero(3), 1.0, x, v) == doctest::Approx(ball_green(q, Point::Zero(3), 1.0, v, x)));
  CHECK_THROWS_AS(ball_green(p, p1(0), 1.0, p1(0), p1(1.5)), DomainError);
  // d = 1 < alpha: finite on the diagonal.
  const StableParams r(1, 1.5);
  CHECK(std::isfinite(ball_green(r, p1(0), 1.0, p1(0.2), p1(0.2))));
  // Off the diagonal G = G(x, x) - c |x - v|^{alpha - 1} + ..., so extrapolate in sqrt(|x - v|).
  const double g1 = ball_green(r, p1(0), 1.0, p1(0.2), p1(0.2 + 1e-8));
  const double g4 = ball_green(r, p1(0), 1.0, p1(0.2), p1(0.2 + 4e-8));
  CHECK(ball_green(r, p1(0), 1.0, p1(0.2), p1(0.2)) == doctest::Approx(2.0 * g1 - g4).epsilon(1e-6));
}

TEST_CASE("ball Poisson kernel") {
  const StableParams p(1, 1.0);
  for (double x : {-0.5, 0.0, 0.7}) {
    for (double y : {-3.0, 1.2, 10.0}) {
      const double oracle = std::sqrt((1.0 - x * x) / (y * y - 1.0)) / (pi * std::abs(x - y));
      CHECK(ball_poisson(p, p1(0), 1.0, p1(x), p1(y)) == doctest::Approx(oracle).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(ball_poisson(p, p1(0), 1.0, p1(0), p1(0.5)), DomainError);
  CHECK_THROWS_AS(ball_poisson(p, p1(0), 1.0, p1(1.0), p1(2.0)), DomainError);
}

TEST_CASE("exit tail") {
  const StableParams p(1, 1.0);
  CHECK(ball_exit_tail_exact(p, p1(0), 2.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(ball_exit_tail_exact(p, p1(0.3), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  // Both sides add up to the radial tail.
  for (double x : {-0.6, 0.0, 0.4}) {
    CHECK(ball_exit_side_tail(p, x, 3.0) + ball_exit_side_tail(p, -x, 3.0) ==
          doctest::Approx(ball_exit_tail_exact(p, p1(x), 3.0)).epsilon(1e-11));
  }
  // From the centre, |Y|^{-2} is Beta(alpha/2, 1 - alpha/2): P(|Y| > 2) = I_{1/4}(alpha/2, 1 - alpha/2).
  const StableParams q(3, 1.0);
  CHECK(ball_exit_tail_exact(q, Point::Zero(3), 2.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  for (int d : {1, 2, 4}) {
    for (double a : {0.5, 1.5}) {
      const StableParams s(d, a);
      Point x = Point::Zero(d);
      x(0) = 0.5;
      const double exact = ball_exit_tail_exact(s, x, 2.5);
      const Bracket b = ball_exit_tail(s, x, 2.5);
      CHECK(b.lower <= exact);
      CHECK(exact <= b.upper);
    }
  }
  CHECK_THROWS_AS(ball_exit_tail_exact(p, p1(0), 0.5), DomainError);
}

TEST_CASE("exit law cdf in d = 1") {
  const StableParams p(1, 1.5);
  CHECK(ball_exit_cdf_1d(p, 0.3, -1.0) + ball_exit_side_tail(p, 0.3, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ball_exit_cdf_1d(p, 0.3, -4.0) == doctest::Approx(ball_exit_side_tail(p, -0.3, 4.0)).epsilon(1e-10));
}

TEST_CASE("expected exit time") {
  CHECK(expected_exit_time_ball(StableParams(1, 1.0), p1(0), 1.0, p1(0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(expected_exit_time_ball(StableParams(1, 1.0), p1(0), 1.0, p1(0.6)) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(expected_exit_time_ball(StableParams(1, 1.0), p1(0), 2.0, p1(1.2)) == doctest::Approx(1.6).epsilon(1e-14));
  // alpha -> Brownian check is outside the range; d = 3, alpha = 1: E^0 tau = 1/2.
  CHECK(expected_exit_time_ball(StableParams(3, 1.0), Point::Zero(3), 1.0, Point::Zero(3)) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("Martin kernels and the punctured line") {
  const StableParams p(2, 1.0);
  CHECK(exterior_ball_martin_raw(p, make_point({1.0, 1.0})) == doctest::Approx(pi / 2.0).epsilon(1e-10));
  CHECK(exterior_ball_martin(p, make_point({2.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(exterior_ball_martin(p, make_point({0.0, 2.0})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(punctured_line_green(1.5, 1.0, -1.0) == doctest::Approx(0.46739).epsilon(1e-5));
  CHECK(punctured_line_green(1.5, 1.0, -1.0) == doctest::Approx(punctured_line_green(1.5, -1.0, 1.0)));
}

TEST_CASE("survival profiles") {
  const StableParams p(1, 1.0);
  const SurvivalProfile hs = survival_profile(Domain::half_space(1), p);
  CHECK(hs.evaluate(16.0, p1(1.0)) == doctest::Approx(0.25));
  CHECK(hs.evaluate(0.5, p1(1.0)) == doctest::Approx(1.0));
  CHECK(hs.bounds(1.0, p1(-1.0)).upper == 0.0);

  const StableParams q(2, 1.0);
  CHECK_THROWS_AS(survival_profile(Domain::special_lipschitz(2, {{0, 0}, {1, 0.5}}, 0.5), q), UnsupportedRegime);
  CHECK_THROWS_AS(survival_profile(Domain::cone(2, 0.7), q), MissingParameter);
  const SurvivalProfile half_cone = survival_profile(Domain::cone(2, pi / 2), q);
  const SurvivalProfile half_plane = survival_profile(Domain::half_space(2), q);
  for (double t : {0.3, 4.0, 50.0}) {
    const Point x = make_point({0.4, 0.9});
    CHECK(half_cone.evaluate(t, x) == doctest::Approx(half_plane.evaluate(t, x)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(survival_profile(Domain::hyperplane_complement(1), p), UnsupportedRegime);
  CHECK_NOTHROW(survival_profile(Domain::hyperplane_complement(1), StableParams(1, 1.5)));

  ProfileOptions o;
  o.force_c11 = true;
  o.lambda1 = 1.0;
  const SurvivalProfile c11 = survival_profile(Domain::ball(p1(0), 1.0), p, o);
  CHECK(c11.is_bracket());
  const Bracket b = c11.bounds(0.5, p1(0.3));
  CHECK(b.lower > 0.0);
  CHECK(b.lower <= b.upper);
  CHECK_THROWS(c11.evaluate(0.5, p1(0.3)));
}

TEST_CASE("heat kernel profile is symmetric") {
  const StableParams p(2, 1.0);
  const Domain D = Domain::exterior_ball(Point::Zero(2), 1.0);
  const Point x = make_point({1.5, 0.2}), y = make_point({-0.3, 2.4});
  const Bracket a = heat_kernel_profile(D, p, 2.0, x, y);
  const Bracket b = heat_kernel_profile(D, p, 2.0, y, x);
  CHECK(a.upper == doctest::Approx(b.upper));
  CHECK(a.lower == doctest::Approx(b.lower));
}

}  // TEST_SUITE
