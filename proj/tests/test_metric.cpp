#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wasser/metric.hpp"

using namespace wasser;

TEST_CASE("line distance") {
  LineSpace<double> line;
  CHECK(line.distance(Point<double>(2.0), Point<double>(5.0)) == 3.0);
  CHECK(line.distance(Point<double>(5.0), Point<double>(5.0)) == 0.0);
  CHECK_THROWS_AS(line.distance(Point<double>(std::size_t{1}), Point<double>(0.0)),
                  std::invalid_argument);
}

TEST_CASE("line distance is exact on rationals") {
  LineSpace<Rational> line;
  CHECK(line.distance(Point<Rational>(Rational(1, 3)), Point<Rational>(Rational(1, 2))) ==
        Rational(1, 6));
}

TEST_CASE("matrix space lookup and validation") {
  MatrixSpace<double> m({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(m.distance(Point<double>(std::size_t{0}), Point<double>(std::size_t{2})) == 2.0);
  CHECK_THROWS_AS(m.distance(Point<double>(std::size_t{3}), Point<double>(std::size_t{0})),
                  std::out_of_range);

  // d01 = 5 > d02 + d21 = 2: triangle violated.
  CHECK_THROWS_AS(MatrixSpace<double>({{0, 5, 1}, {5, 0, 1}, {1, 1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MatrixSpace<double>({{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(MatrixSpace<double>({{0, -1}, {-1, 0}}), std::invalid_argument);
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(MatrixSpace<double>({{0, inf}, {inf, 0}}), std::invalid_argument);
}

TEST_CASE("product distance is the max") {
  LineSpace<double> a, b;
  Point<double> x(0.0), y(3.0), u(0.0), v(1.0);
  CHECK(product_distance<double>(a, b, x, u, y, v) == 3.0);
  CHECK(product_distance<double>(a, b, x, u, x, u) == 0.0);
  CHECK(product_distance<double>(a, b, x, u, Point<double>(2.0),
                                 Point<double>(2.0)) == 2.0);
}

TEST_CASE("metric axioms on sampled points") {
  auto plane = std::make_shared<EuclideanSpace<double>>(2);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<Point<double>> pts;
  for (int i = 0; i < 50; ++i) pts.push_back(Point<double>({u(rng), u(rng)}));
  auto rep = check_metric_axioms<double>(*plane, pts);
  CHECK(rep.failures == 0);
  CHECK(rep.worst_slack >= -1e-12);

  SUBCASE("single point passes") {
    auto one = check_metric_axioms<double>(*plane, {pts[0]});
    CHECK(one.failures == 0);
  }

  SUBCASE("product of line and plane is a metric") {
    auto line = std::make_shared<LineSpace<double>>();
    ProductSpace<double> prod(line, plane);
    std::vector<Point<double>> pairs;
    for (int i = 0; i < 12; ++i)
      pairs.push_back(ProductSpace<double>::pair(Point<double>(u(rng)),
                                                 Point<double>({u(rng), u(rng)})));
    auto prep = check_metric_axioms<double>(prod, pairs);
    CHECK(prep.failures == 0);
  }
}

TEST_CASE("axiom check flags a broken matrix") {
  // Construct the violating matrix bypassing MatrixSpace validation is
  // impossible; check the report path with values that pass at
  // construction tolerance but are checked with a harsher sample set
  // via a custom space instead.
  struct Broken final : MetricSpace<double> {
    double distance(const Point<double>& x, const Point<double>& y) const override {
      if (x == y) return 0.0;
      std::size_t i = x.index(), j = y.index();
      if ((i == 0 && j == 1) || (i == 1 && j == 0)) return 5.0;
      return 1.0;
    }
    bool contains(const Point<double>& x) const override {
      return x.is_index() && x.index() < 3;
    }
    std::string name() const override { return "broken"; }
    bool equals(const MetricSpace<double>& o) const override { return &o == this; }
  } broken;
  std::vector<Point<double>> pts{Point<double>(std::size_t{0}),
                                 Point<double>(std::size_t{1}),
                                 Point<double>(std::size_t{2})};
  auto rep = check_metric_axioms<double>(broken, pts);
  CHECK(rep.failures > 0);
  CHECK(rep.worst_slack < 0.0);
}

TEST_CASE("empty sample is rejected") {
  LineSpace<double> line;
  CHECK_THROWS_AS(check_metric_axioms<double>(line, {}), std::invalid_argument);
}
