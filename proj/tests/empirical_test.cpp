#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "hiernet/empirical.hpp"
#include "support.hpp"

using namespace hiernet;
using testsupport::L;

TEST_SUITE("empirical") {

TEST_CASE("BFS distances from the root of (3,2)") {
  const Params p = Params::validate(3, 2);
  const GraphView g = GraphView::build(p);
  const auto dist = bfs_distances(g, index_of(L({0, 0}), p));
  CHECK(dist[index_of(L({0, 0}), p)] == 0);
  CHECK(dist[index_of(L({1, 1}), p)] == 1);
  CHECK(dist[index_of(L({0, 1}), p)] == 1);
  CHECK(dist[index_of(L({1, 0}), p)] == 2);
}

TEST_CASE("BFS rejects a disconnected graph") {
  const GraphView partial =
      GraphView::from_edges(Params::validate(2, 2), {{0, 1}});
  CHECK_THROWS_AS(bfs_distances(partial, 0), std::runtime_error);
}

TEST_CASE("eccentricities reproduce radius k and diameter 2k-1") {
  for (const auto& [n, k] : testsupport::small_grid()) {
    const GraphView g = GraphView::build(Params::validate(n, k));
    const auto ecc = bfs_eccentricities(g);
    CHECK(ecc.radius == k);
    CHECK(ecc.diameter == 2 * k - 1);
    CHECK(ecc.root_eccentricity == k);
  }
}

TEST_CASE("local clustering of the worked (3,2) vertices") {
  const Params p = Params::validate(3, 2);
  const GraphView g = GraphView::build(p);
  CHECK(local_clustering(g, index_of(L({0, 0}), p)) == Rational(1, 5));
  CHECK(local_clustering(g, index_of(L({1, 1}), p)) == Rational(2, 3));
  CHECK(local_clustering(g, index_of(L({0, 1}), p)) == 1);
  CHECK(local_clustering(g, index_of(L({1, 0}), p)) == Rational(1, 3));
}

TEST_CASE("triangle census matches the closed forms") {
  for (const auto& [n, k] : testsupport::small_grid()) {
    const Params p = Params::validate(n, k);
    const auto tc = triangle_and_triple_census(GraphView::build(p));
    CHECK(tc.triangles == triangle_count(p));
    CHECK(tc.triples == triple_count(p));
    CHECK(tc.transitivity == transitivity(p));
  }
}

TEST_CASE("measure summarizes (3,2) correctly") {
  const GraphView g = GraphView::build(Params::validate(3, 2));
  const EmpiricalReport r = measure(g);
  REQUIRE(r.degree_histogram.size() == 3);
  CHECK(r.degree_histogram.at(2) == 2);
  CHECK(r.degree_histogram.at(3) == 6);
  CHECK(r.degree_histogram.at(6) == 1);
  CHECK(r.radius == 2);
  CHECK(r.diameter == 3);
  CHECK(r.root_eccentricity == 2);
  CHECK(r.clustering == Rational(83, 135));
  CHECK(r.triangles == 5);
  CHECK(r.triples == 35);
  CHECK(r.transitivity == Rational(3, 7));
}

TEST_CASE("log-log fit recovers an exact power law") {
  std::vector<std::pair<double, double>> points;
  for (double x : {2.0, 4.0, 8.0, 16.0, 32.0})
    points.emplace_back(x, 5.0 * std::pow(x, -1.2));
  const LogLogFit fit = fit_loglog(points);
  CHECK(fit.slope == doctest::Approx(-1.2).epsilon(1e-12));
  CHECK(std::exp(fit.intercept) == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(fit_degree_exponent(points) == doctest::Approx(2.2).epsilon(1e-12));
  CHECK(fit_clustering_exponent(points) == doctest::Approx(-1.2).epsilon(1e-12));
}

TEST_CASE("log-log fit of a flat line has slope zero") {
  const std::vector<std::pair<double, double>> points{{1, 3}, {2, 3}, {4, 3}, {8, 3}};
  CHECK(fit_loglog(points).slope == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("log-log fit input validation") {
  const std::vector<std::pair<double, double>> two{{1, 1}, {2, 2}};
  CHECK_THROWS_AS(fit_loglog(two), std::invalid_argument);
  const std::vector<std::pair<double, double>> zero{{1, 1}, {2, 2}, {0, 3}};
  CHECK_THROWS_AS(fit_loglog(zero), std::domain_error);
  const std::vector<std::pair<double, double>> neg{{1, 1}, {2, -2}, {4, 3}};
  CHECK_THROWS_AS(fit_loglog(neg), std::domain_error);
}

TEST_CASE("degree-exponent fit points for (3,3)") {
  const auto points = degree_exponent_fit_points(Params::validate(3, 3));
  // Root classes: degrees 3, 7, 14 with 6, 2, 1 vertices (27 total).
  REQUIRE(points.size() == 3);
  CHECK(points[0].first == 3.0);
  CHECK(points[0].second == doctest::Approx(9.0 / 27.0).epsilon(1e-15));
  CHECK(points[1].first == 7.0);
  CHECK(points[1].second == doctest::Approx(3.0 / 27.0).epsilon(1e-15));
  CHECK(points[2].first == 14.0);
  CHECK(points[2].second == doctest::Approx(1.0 / 27.0).epsilon(1e-15));
  CHECK_THROWS_AS(degree_exponent_fit_points(Params::validate(2, 5)),
                  std::domain_error);
}

TEST_CASE("fitted degree exponent approaches the theoretical one") {
  const double fitted = fit_degree_exponent(degree_exponent_fit_points(Params::validate(5, 8)));
  CHECK(fitted == doctest::Approx(2.1843143865676042).epsilon(1e-9));
  CHECK(std::abs(fitted - degree_exponent(Params::validate(5, 8))) < 0.1);
}

TEST_CASE("clustering fit points and the 1/degree signature") {
  const auto points = clustering_fit_points(Params::validate(3, 3));
  REQUIRE(points.size() == 3);
  CHECK(points[0].first == 3.0);
  CHECK(points[0].second == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(points[1].first == 7.0);
  CHECK(points[1].second == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
  CHECK(points[2].first == 14.0);
  CHECK(points[2].second == doctest::Approx(1.0 / 13.0).epsilon(1e-15));

  const double slope = fit_clustering_exponent(clustering_fit_points(Params::validate(5, 8)));
  CHECK(slope == doctest::Approx(-0.9999992907096866).epsilon(1e-9));
  CHECK(slope > -1.15);
  CHECK(slope < -0.85);
  CHECK_THROWS_AS(clustering_fit_points(Params::validate(2, 5)), std::domain_error);
}

}  // TEST_SUITE
