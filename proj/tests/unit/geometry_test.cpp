#include "fracheat/error.hpp"
#include "fracheat/geometry.hpp"
#include "fracheat/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace fracheat;
using std::numbers::pi;

namespace {

std::vector<Domain> catalog(int d) {
  std::vector<Domain> out;
  Point c = Point::Zero(d);
  c(0) = 0.25;
  out.push_back(Domain::ball(c, 1.5));
  out.push_back(Domain::half_space(d));
  out.push_back(Domain::exterior_ball(c, 0.75));
  out.push_back(Domain::hyperplane_complement(d));
  out.push_back(Domain::ball_union_exterior_ball(c, 0.5, 1.5));
  if (d >= 2) {
    out.push_back(Domain::cone(d, pi / 5));
    out.push_back(Domain::cone(d, 2.2));
    out.push_back(Domain::special_lipschitz(d, {{-1.0, 0.0}, {0.0, 0.5}, {2.0, -0.5}}, 0.5));
  } else {
    out.push_back(Domain::interval_complement({{-1.0, 1.0}, {2.0, 2.5}}));
  }
  return out;
}

Point random_point(int d, double scale, Rng& rng) {
  Point p(d);
  for (int i = 0; i < d; ++i) p(i) = scale * (2.0 * rng.uniform() - 1.0);
  return p;
}

Point random_in_ball(const Point& c, double r, Rng& rng) {
  const int d = static_cast<int>(c.size());
  Point u(d);
  for (int i = 0; i < d; ++i) u(i) = rng.normal();
  u.normalize();
  return c + r * std::pow(rng.uniform(), 1.0 / d) * u;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("distances of simple domains") {
  CHECK(dist_to_complement(Domain::ball(make_point({0, 0}), 2.0), make_point({0.5, 0})) == doctest::Approx(1.5));
  CHECK(dist_to_complement(Domain::half_space(2), make_point({7.0, 0.3})) == doctest::Approx(0.3));
  CHECK(dist_to_complement(Domain::exterior_ball(make_point({0, 0}), 1.0), make_point({0, 3})) == doctest::Approx(2.0));
  CHECK(dist_to_complement(Domain::hyperplane_complement(2), make_point({4, -0.7})) == doctest::Approx(0.7));
  CHECK(dist_to_complement(Domain::interval_complement({{-1, 1}}), make_point({1.25})) == doctest::Approx(0.25));
  // Cone of half-angle pi/4 around e_2: the point (1, 2) is at angle atan(1/2) from the axis.
  const double phi = std::atan(0.5);
  CHECK(dist_to_complement(Domain::cone(2, pi / 4), make_point({1, 2})) ==
        doctest::Approx(std::sqrt(5.0) * std::sin(pi / 4 - phi)));
  CHECK(dist_to_complement(Domain::ball(make_point({0}), 1.0), make_point({3})) == 0.0);
}

TEST_CASE("membership matches positive distance") {
  Rng rng(7, 0);
  for (int d : {1, 2, 3}) {
    for (const Domain& D : catalog(d)) {
      for (int k = 0; k < 2000; ++k) {
        const Point x = random_point(d, 3.0, rng);
        CAPTURE(D.describe());
        REQUIRE(contains(D, x) == (dist_to_complement(D, x) > 0.0));
      }
    }
  }
}

TEST_CASE("distance is 1-Lipschitz and the inscribed ball lies in D") {
  Rng rng(8, 0);
  for (int d : {1, 2, 3}) {
    for (const Domain& D : catalog(d)) {
      for (int k = 0; k < 300; ++k) {
        const Point x = random_point(d, 3.0, rng);
        const Point y = random_point(d, 3.0, rng);
        CAPTURE(D.describe());
        REQUIRE(std::abs(dist_to_complement(D, x) - dist_to_complement(D, y)) <= (x - y).norm() + 1e-12);
        const double delta = dist_to_complement(D, x);
        if (delta > 0.0) {
          for (int j = 0; j < 20; ++j) REQUIRE(contains(D, random_in_ball(x, 0.999 * delta, rng)));
        }
      }
    }
  }
}

TEST_CASE("fat witnesses contain their balls") {
  Rng rng(9, 0);
  for (int d : {1, 2, 3}) {
    for (const Domain& D : catalog(d)) {
      if (D.type_name() == "hyperplane_complement") continue;
      int witnessed = 0;
      for (int k = 0; k < 40; ++k) {
        const Point x = random_point(d, 2.5, rng);
        if (!contains(D, x)) continue;
        const double r = 0.05 + 1.5 * rng.uniform();
        const auto w = fat_witness(D, x, r);
        if (!w) continue;
        ++witnessed;
        CAPTURE(D.describe());
        CHECK(w->kappa >= declared_kappa(D) - 1e-12);
        for (int j = 0; j < 10000 / 40; ++j) {
          const Point z = random_in_ball(w->center, 0.999 * w->kappa * r, rng);
          REQUIRE(contains(D, z));
          REQUIRE((z - x).norm() < r);
        }
      }
      CHECK(witnessed > 0);
    }
  }
}

TEST_CASE("witness requires a point of the closure") {
  CHECK_THROWS_AS(fat_witness(Domain::ball(make_point({0}), 1.0), make_point({5}), 0.5), DomainError);
}

TEST_CASE("declared kappa of a Lipschitz graph") {
  const Domain D = Domain::special_lipschitz(2, {{0.0, 0.0}, {1.0, 1.0}}, 1.0);
  CHECK(declared_kappa(D) == doctest::Approx(0.353553).epsilon(1e-6));
}

TEST_CASE("scaling respects distances") {
  Rng rng(10, 0);
  for (int d : {1, 2}) {
    for (const Domain& D : catalog(d)) {
      const Domain S = scale_domain(D, 2.5);
      for (int k = 0; k < 200; ++k) {
        const Point x = random_point(d, 3.0, rng);
        REQUIRE(dist_to_complement(S, 2.5 * x) == doctest::Approx(2.5 * dist_to_complement(D, x)).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("domain invariants are validated") {
  CHECK_THROWS_AS(Domain::ball(make_point({0}), -1.0), DomainError);
  CHECK_THROWS_AS(Domain::interval_complement({{0.0, 1.0}, {0.5, 2.0}}), DomainError);
  CHECK_THROWS_AS(Domain::ball_union_exterior_ball(make_point({0}), 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(Domain::special_lipschitz(2, {{0.0, 0.0}, {1.0, 3.0}}, 1.0), DomainError);
}

TEST_CASE("descriptors and scale information") {
  CHECK(Domain::half_space(2).is_scale_invariant());
  CHECK(Domain::cone(3, 1.0).is_scale_invariant());
  CHECK_FALSE(Domain::ball(make_point({0}), 1.0).is_scale_invariant());
  CHECK(Domain::interval_complement({{-1, 1}}).complement_diameter() == doctest::Approx(2.0));
  CHECK(std::isinf(Domain::half_space(1).complement_diameter()));
  CHECK(Domain::hyperplane_complement(2).complement_is_thin());
  CHECK(c11_scale(Domain::ball(make_point({0, 0}), 3.0)).value() == doctest::Approx(3.0));
  CHECK_FALSE(c11_scale(Domain::cone(2, 0.5)).has_value());
}

}  // TEST_SUITE
