#include "fracheat/error.hpp"
#include "fracheat/stable_core.hpp"

#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fracheat;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

DensityOptions no_closed() {
  DensityOptions o;
  o.use_closed_forms = false;
  return o;
}

}  // namespace

TEST_SUITE("stable_core") {

TEST_CASE("parameters are validated") {
  CHECK_THROWS_AS(StableParams(1, 2.0), DomainError);
  CHECK_THROWS_AS(StableParams(1, 0.0), DomainError);
  CHECK_THROWS_AS(StableParams(0, 1.0), DomainError);
  CHECK_THROWS_AS(StableParams(kMaxDim + 1, 1.0), DomainError);
  CHECK_NOTHROW(StableParams(3, 1.999));
}

TEST_CASE("Levy density constant") {
  const StableParams p(1, 1.0);
  CHECK(levy_density(p, make_point({2.0})) == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-14));
  CHECK_THROWS_AS(levy_density(p, make_point({0.0})), DomainError);
}

TEST_CASE("density at the origin") {
  CHECK(StableParams(2, 1.0).density_at_origin() == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-14));
  CHECK(StableParams(1, 1.0).density_at_origin() == doctest::Approx(1.0 / pi).epsilon(1e-14));
  // d = 3, alpha = 1: 1 / pi^2.
  CHECK(StableParams(3, 1.0).density_at_origin() == doctest::Approx(1.0 / (pi * pi)).epsilon(1e-14));
}

TEST_CASE("quadrature reproduces the Cauchy densities") {
  for (double r : {0.0, 0.01, 0.3, 1.0, 2.5, 7.0, 40.0}) {
    CAPTURE(r);
    const double c1 = 1.0 / (pi * (1.0 + r * r));
    const double c2 = 1.0 / (2.0 * pi * std::pow(1.0 + r * r, 1.5));
    const double c3 = 1.0 / (pi * pi * std::pow(1.0 + r * r, 2.0));
    CHECK(rel(stable_density_radial(StableParams(1, 1.0), r, no_closed()).value, c1) < 1e-9);
    CHECK(rel(stable_density_radial(StableParams(2, 1.0), r, no_closed()).value, c2) < 1e-8);
    CHECK(rel(stable_density_radial(StableParams(3, 1.0), r, no_closed()).value, c3) < 1e-9);
  }
}

TEST_CASE("d = 1 density against a Fourier cosine transform") {
  boost::math::quadrature::ooura_fourier_cos<double> cosine;
  for (double a : {0.5, 0.8, 1.3, 1.9}) {
    const StableParams p(1, a);
    for (double r : {0.2, 1.0, 3.0}) {
      CAPTURE(a);
      CAPTURE(r);
      const double oracle = cosine.integrate([a](double k) { return std::exp(-std::pow(k, a)); }, r).first / pi;
      CHECK(rel(stable_density_radial(p, r).value, oracle) < 1e-7);
    }
  }
}

TEST_CASE("d = 3 density against a Fourier sine transform") {
  boost::math::quadrature::ooura_fourier_sin<double> sine;
  for (double a : {0.7, 1.5}) {
    const StableParams p(3, a);
    for (double r : {0.5, 2.0}) {
      CAPTURE(a);
      CAPTURE(r);
      const double moment = sine.integrate([a](double k) { return k * std::exp(-std::pow(k, a)); }, r).first;
      CHECK(rel(stable_density_radial(p, r).value, moment / (2.0 * pi * pi * r)) < 1e-7);
    }
  }
}

TEST_CASE("tail series and quadrature agree where both apply") {
  for (int d : {1, 2, 3}) {
    for (double a : {0.6, 1.5}) {
      const StableParams p(d, a);
      // For alpha > 1 the series is only asymptotic and needs a larger radius.
      const double r = a > 1.0 ? 10.0 : 6.0;
      const DensityEval s = stable_density_tail_series(p, r);
      REQUIRE(std::isfinite(s.rel_err));
      CHECK(rel(s.value, stable_density_quadrature(p, r).value) < 1e-7);
    }
  }
  CHECK_FALSE(std::isfinite(stable_density_tail_series(StableParams(1, 1.5), 6.0).rel_err));
}

TEST_CASE("free density scaling") {
  const StableParams p(2, 1.4);
  const Point x = make_point({0.3, -0.2});
  const Point y = make_point({1.1, 0.5});
  for (double t : {0.05, 1.0, 30.0}) {
    const double z = (x - y).norm();
    const double scaled = std::pow(t, -2.0 / 1.4) * stable_density_radial(p, z * std::pow(t, -1.0 / 1.4)).value;
    CHECK(rel(free_density(p, t, x, y).value, scaled) < 1e-12);
    CHECK(free_density_value(p, t, z) == doctest::Approx(scaled).epsilon(1e-12));
  }
  CHECK_THROWS_AS(free_density(p, 0.0, x, y), DomainError);
  CHECK_THROWS_AS(free_density(p, -1.0, x, y), DomainError);
  CHECK_THROWS_AS(free_density(p, 1.0, make_point({0.0}), y), DomainError);
}

TEST_CASE("free density bound") {
  const StableParams p(1, 1.0);
  CHECK(free_density_bound(p, 1.0, make_point({2.0})) == doctest::Approx(0.25));
  CHECK(free_density_bound(p, 1.0, make_point({0.0})) == doctest::Approx(1.0));
}

TEST_CASE("incomplete kernel integral") {
  CHECK(incomplete_kernel_integral(0.5, 0.5, 3.0) == doctest::Approx(2.0 * std::log(std::sqrt(3.0) + 2.0)).epsilon(1e-12));
  // a = 1, b = 2: int_0^w (1+s)^{-2} ds = w / (1 + w).
  CHECK(incomplete_kernel_integral(1.0, 2.0, 4.0) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(incomplete_kernel_integral(1.0, 2.0, INFINITY) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(incomplete_kernel_integral(0.5, 0.5, 0.0) == 0.0);
  // b > a: s = x / (1 - x) turns it into an incomplete beta function.
  for (auto [a, b] : {std::pair{0.25, 0.5}, std::pair{0.75, 1.5}, std::pair{0.3, 2.0}}) {
    for (double w : {0.01, 1.0, 50.0, 1e6}) {
      const double oracle = boost::math::beta(a, b - a) * boost::math::ibeta(a, b - a, w / (1.0 + w));
      CHECK(incomplete_kernel_integral(a, b, w) == doctest::Approx(oracle).epsilon(1e-10));
    }
    CHECK(incomplete_kernel_integral(a, b, INFINITY) == doctest::Approx(boost::math::beta(a, b - a)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(incomplete_kernel_integral(0.5, 0.5, -1.0), DomainError);
}

}  // TEST_SUITE
