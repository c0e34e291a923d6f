#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wasser/measure.hpp"

using namespace wasser;

namespace {
auto line_d() { return std::make_shared<LineSpace<double>>(); }
auto line_q() { return std::make_shared<LineSpace<Rational>>(); }

DiscreteMeasure<double> make(std::shared_ptr<LineSpace<double>> sp,
                             std::vector<double> xs, std::vector<double> ws) {
  std::vector<Point<double>> atoms;
  for (double x : xs) atoms.emplace_back(x);
  return DiscreteMeasure<double>(sp, std::move(atoms), std::move(ws));
}
}  // namespace

TEST_CASE("dirac") {
  auto sp = line_d();
  auto d = dirac<double>(sp, Point<double>(3.0));
  CHECK(d.size() == 1);
  CHECK(d.weights()[0] == 1.0);
  CHECK(d.support()[0] == Point<double>(3.0));
  CHECK(p_moment(d, Point<double>(3.0), 2.0).value == 0.0);
  CHECK_THROWS_AS(dirac<double>(sp, Point<double>(std::size_t{0})),
                  std::invalid_argument);
}

TEST_CASE("construction coalesces, prunes, and normalizes") {
  auto sp = line_d();
  auto mu = make(sp, {1.0, 0.0, 1.0, 2.0}, {0.25, 0.5, 0.25, 0.0});
  CHECK(mu.size() == 2);
  CHECK(mu.mass_at(Point<double>(1.0)) == 0.5);
  CHECK(mu.mass_at(Point<double>(0.0)) == 0.5);
  CHECK(mu.mass_at(Point<double>(2.0)) == 0.0);

  CHECK_THROWS_AS(make(sp, {0.0, 1.0}, {0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(make(sp, {0.0, 1.0}, {1.5, -0.5}), std::invalid_argument);

  SUBCASE("exact mode requires exact normalization") {
    auto sq = line_q();
    std::vector<Point<Rational>> atoms{Point<Rational>(Rational(0)),
                                       Point<Rational>(Rational(1))};
    CHECK_THROWS_AS(DiscreteMeasure<Rational>(sq, atoms,
                                              {Rational(1, 2), Rational(1, 3)}),
                    std::invalid_argument);
    DiscreteMeasure<Rational> ok(sq, atoms, {Rational(1, 3), Rational(2, 3)});
    CHECK(ok.weights()[0] == Rational(1, 3));
  }
}

TEST_CASE("convex_sum") {
  auto sp = line_d();
  auto mu = make(sp, {0.0, 1.0}, {0.5, 0.5});
  auto nu = make(sp, {1.0, 2.0}, {0.25, 0.75});

  CHECK(convex_sum(mu, nu, 1.0) == mu);
  CHECK(convex_sum(mu, nu, 0.0) == nu);
  CHECK(convex_sum(mu, mu, 0.3) == mu);

  auto half = convex_sum(dirac<double>(sp, Point<double>(0.0)),
                         dirac<double>(sp, Point<double>(1.0)), 0.5);
  CHECK(half.size() == 2);
  CHECK(half.mass_at(Point<double>(0.0)) == 0.5);

  CHECK_THROWS_AS(convex_sum(mu, nu, 1.5), std::invalid_argument);
  auto other_space = std::make_shared<EuclideanSpace<double>>(2);
  auto on_plane = dirac<double>(other_space, Point<double>({0.0, 0.0}));
  CHECK_THROWS_AS(convex_sum(mu, on_plane, 0.5), std::invalid_argument);

  SUBCASE("support of a proper mixture is the union") {
    auto mix = convex_sum(mu, nu, 0.5);
    CHECK(mix.size() == 3);
  }
}

TEST_CASE("finite_convex_sum") {
  auto sp = line_d();
  auto d0 = dirac<double>(sp, Point<double>(0.0));
  auto d1 = dirac<double>(sp, Point<double>(1.0));
  auto d2 = dirac<double>(sp, Point<double>(2.0));

  auto mix = finite_convex_sum<double>({{0.5, d0}, {0.25, d1}, {0.25, d2}});
  CHECK(mix.mass_at(Point<double>(0.0)) == 0.5);
  CHECK(mix.mass_at(Point<double>(1.0)) == 0.25);

  auto single = finite_convex_sum<double>({{1.0, d1}});
  CHECK(single == d1);

  // Projection: Kronecker weights pick out one term.
  auto proj = finite_convex_sum<double>({{0.0, d0}, {1.0, d1}, {0.0, d2}});
  CHECK(proj == d1);

  CHECK_THROWS_AS(finite_convex_sum<double>({}), std::invalid_argument);
  CHECK_THROWS_AS(finite_convex_sum<double>({{0.5, d0}, {0.2, d1}}),
                  std::invalid_argument);
}

TEST_CASE("pushforward") {
  auto sp = line_d();
  auto mu = make(sp, {0.0, 1.0}, {0.5, 0.5});

  auto same = pushforward<double>(mu, sp, [](const Point<double>& x) { return x; });
  CHECK(same == mu);

  auto collapsed = pushforward<double>(
      mu, sp, [](const Point<double>&) { return Point<double>(0.0); });
  CHECK(collapsed == dirac<double>(sp, Point<double>(0.0)));

  CHECK_THROWS_AS(pushforward<double>(mu, sp,
                                      [](const Point<double>&) {
                                        return Point<double>(std::size_t{0});
                                      }),
                  std::invalid_argument);
}

TEST_CASE("p_moment") {
  auto sp = line_d();
  auto mu = make(sp, {0.0, 2.0}, {0.5, 0.5});
  CHECK(p_moment(mu, Point<double>(0.0), 2.0).value == doctest::Approx(2.0));
  CHECK_THROWS_AS(p_moment(mu, Point<double>(0.0), 0.5), std::invalid_argument);

  // Basepoint independence via inequality (1): the moment about any
  // second basepoint is bounded by 2^{p-1} (moment + d(x0,x1)^p).
  double p = 2.0;
  double m0 = p_moment(mu, Point<double>(0.0), p).value;
  double m5 = p_moment(mu, Point<double>(5.0), p).value;
  double bound = std::pow(2.0, p - 1) * (m0 + std::pow(5.0, p));
  CHECK(m5 <= bound);
}

TEST_CASE("measure_gap and approx_equal") {
  auto sp = line_d();
  auto mu = make(sp, {0.0, 1.0}, {0.5, 0.5});
  auto nu = make(sp, {0.0, 2.0}, {0.5, 0.5});
  CHECK(measure_gap(mu, mu) == 0.0);
  CHECK(measure_gap(mu, nu) == 0.5);
  CHECK(approx_equal(mu, mu, 0.0));
  CHECK_FALSE(approx_equal(mu, nu, 1e-9));
}
