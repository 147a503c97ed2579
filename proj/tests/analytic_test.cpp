#include <doctest.h>

#include <cmath>

#include "hiernet/analytic.hpp"
#include "support.hpp"

using namespace hiernet;
using testsupport::L;

namespace {

Rational frac(long long num, long long den) { return {BigInt(num), BigInt(den)}; }

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("edge counts hit the pinned values") {
  CHECK(edge_count(Params::validate(4, 1)) == 6);
  CHECK(edge_count(Params::validate(3, 2)) == 14);
  CHECK(edge_count(Params::validate(4, 2)) == 36);
  CHECK(edge_count(Params::validate(4, 3)) == 174);
  CHECK(edge_count(Params::validate(3, 3)) == 51);
  CHECK(edge_count(Params::validate(6, 1)) == 15);
}

TEST_CASE("the three size forms agree on a wide grid") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= 6; ++k) {
      const Params p = Params::validate(n, k);
      const BigInt sum = edge_count(p);
      CHECK(sum == edge_count_closed_form(p));
      CHECK(sum == edge_count_recurrence(p));
    }
  }
  // Stays exact far beyond 64 bits.
  const Params big = Params::validate(7, 40);
  CHECK(edge_count(big) == edge_count_closed_form(big));
  CHECK(edge_count(big) == edge_count_recurrence(big));
}

TEST_CASE("the n = 2 family is a tree plus nothing") {
  for (int k = 1; k <= 10; ++k) {
    const Params p = Params::validate(2, k);
    CHECK(edge_count(p) == ipow(BigInt(2), k) - 1);
    CHECK(triangle_count(p) == 0);
    CHECK(clustering_coefficient(p) == 0);
    for (const ClassStat& row : class_census(p)) CHECK(row.clustering == 0);
  }
}

TEST_CASE("closed metrics") {
  const auto m = metric_closed(Params::validate(3, 3));
  CHECK(m.radius == 3);
  CHECK(m.diameter == 5);
  CHECK(m.root_eccentricity == 3);
  CHECK(metric_closed(Params::validate(5, 1)).diameter == 1);
}

TEST_CASE("census of (3,2) matches the worked table") {
  const auto census = class_census(Params::validate(3, 2));
  REQUIRE(census.size() == 4);

  CHECK(census[0].cls == VertexClass{VertexKind::GlobalRoot, 0});
  CHECK(census[0].count == 1);
  CHECK(census[0].degree == 6);
  CHECK(census[0].clustering == frac(1, 5));

  CHECK(census[1].cls == VertexClass{VertexKind::SubRoot, 1});
  CHECK(census[1].count == 2);
  CHECK(census[1].degree == 3);
  CHECK(census[1].clustering == frac(1, 3));

  CHECK(census[2].cls == VertexClass{VertexKind::GlobalPeripheral, 0});
  CHECK(census[2].count == 4);
  CHECK(census[2].degree == 3);
  CHECK(census[2].clustering == frac(2, 3));

  CHECK(census[3].cls == VertexClass{VertexKind::SubPeripheral, 1});
  CHECK(census[3].count == 2);
  CHECK(census[3].degree == 2);
  CHECK(census[3].clustering == frac(1, 1));
}

TEST_CASE("degree sum is twice the size on the whole grid") {
  for (const auto& [n, k] : testsupport::small_grid()) {
    const Params p = Params::validate(n, k);
    BigInt degree_sum = 0;
    for (const ClassStat& row : class_census(p)) degree_sum += row.count * row.degree;
    CHECK(degree_sum == 2 * edge_count(p));
  }
}

TEST_CASE("average degree") {
  const auto avg = average_degree(Params::validate(3, 2));
  CHECK(avg.exact == frac(28, 9));
  CHECK(avg.asymptotic == 5);
  const auto avg53 = average_degree(Params::validate(5, 3));
  CHECK(avg53.asymptotic == 9);  // n + 2k - 2
  CHECK(avg53.exact == Rational(2 * edge_count(Params::validate(5, 3)), BigInt(125)));
}

TEST_CASE("clustering coefficient hits the pinned rationals") {
  CHECK(clustering_coefficient(Params::validate(3, 2)) == frac(83, 135));
  CHECK(clustering_coefficient(Params::validate(3, 3)) == frac(4103, 7371));
  CHECK(clustering_coefficient(Params::validate(4, 2)) == frac(1307, 1760));
  CHECK(clustering_coefficient(Params::validate(4, 3)) == frac(3631, 5320));
}

TEST_CASE("complete-graph degeneration at k = 1") {
  for (int n = 3; n <= 8; ++n) {
    const Params p = Params::validate(n, 1);
    CHECK(clustering_coefficient(p) == 1);
    CHECK(transitivity(p) == 1);
    CHECK(triangle_count(p) == choose3(BigInt(n)));
    for (const ClassStat& row : class_census(p)) CHECK(row.clustering == 1);
  }
  // K_2 is the one member with no triples at all.
  CHECK(transitivity(Params::validate(2, 1)) == 0);
  CHECK(clustering_coefficient(Params::validate(2, 1)) == 0);
}

TEST_CASE("triangles, triples, transitivity") {
  CHECK(triangle_count(Params::validate(3, 2)) == 5);
  CHECK(triple_count(Params::validate(3, 2)) == 35);
  CHECK(transitivity(Params::validate(3, 2)) == frac(3, 7));

  CHECK(triangle_count(Params::validate(3, 3)) == 19);
  CHECK(triple_count(Params::validate(3, 3)) == 217);
  CHECK(transitivity(Params::validate(3, 3)) == frac(57, 217));

  CHECK(triple_count(Params::validate(4, 2)) == 159);
  CHECK(transitivity(Params::validate(4, 2)) == frac(26, 53));

  CHECK(triangle_count(Params::validate(4, 3)) == 132);
  CHECK(triple_count(Params::validate(4, 3)) == 1494);
  CHECK(transitivity(Params::validate(4, 3)) == frac(22, 83));

  for (const auto& [n, k] : testsupport::small_grid()) {
    const Params p = Params::validate(n, k);
    CHECK(triangle_count(p) == triangle_count_recurrence(p));
  }
}

TEST_CASE("degree exponent") {
  CHECK(degree_exponent(Params::validate(3, 2)) ==
        doctest::Approx(2.5849625007211563).epsilon(1e-12));
  CHECK(degree_exponent(Params::validate(5, 8)) ==
        doctest::Approx(2.160964047443681).epsilon(1e-12));
  CHECK_THROWS_AS(degree_exponent(Params::validate(2, 3)), std::domain_error);
  CHECK_THROWS_WITH(degree_exponent(Params::validate(2, 3)),
                    "gamma undefined for n=2");
}

TEST_CASE("cumulative degree fraction") {
  const Params p = Params::validate(3, 2);
  CHECK(cumulative_degree_fraction(p, 3) == frac(7, 9));
  CHECK(cumulative_degree_fraction(p, 1) == 1);
  CHECK(cumulative_degree_fraction(p, 7) == 0);
  CHECK(cumulative_degree_fraction(p, 6) == frac(1, 9));
}

TEST_CASE("distance upper bound from the shared prefix") {
  const Params p = Params::validate(2, 4);
  CHECK(distance_upper_bound(L({0, 1, 0, 1}), L({1, 0, 1, 0}), p) == 7);
  CHECK(distance_upper_bound(L({0, 1, 0, 1}), L({0, 1, 0, 0}), p) == 1);
  CHECK(distance_upper_bound(L({0, 1, 0, 1}), L({0, 1, 0, 1}), p) == 0);
  CHECK(distance_upper_bound(L({0, 1, 1, 1}), L({0, 0, 1, 1}), p) == 5);
}

TEST_CASE("sub-root rows satisfy the exact hyperbola c * degree = n - 2") {
  for (int n = 3; n <= 8; ++n) {
    const Params p = Params::validate(n, 5);
    for (const ClassStat& row : class_census(p))
      if (row.cls.kind == VertexKind::SubRoot)
        CHECK(Rational(row.degree) * row.clustering == Rational(BigInt(n - 2)));
  }
}

TEST_CASE("analyze assembles a coherent report") {
  const Params p = Params::validate(3, 2);
  const AnalyticReport r = analyze(p);
  CHECK(r.order == 9);
  CHECK(r.size == 14);
  CHECK(r.metrics.diameter == 3);
  CHECK(r.triangles == 5);
  CHECK(r.transitivity == frac(3, 7));
  CHECK(r.class_stats.size() == 4);
  REQUIRE(r.degree_exponent.has_value());
  CHECK(*r.degree_exponent == doctest::Approx(2.5849625007).epsilon(1e-9));

  CHECK_FALSE(analyze(Params::validate(2, 4)).degree_exponent.has_value());
}

TEST_CASE("analytics stay cheap far beyond any materializable size") {
  const Params p = Params::validate(12, 50);  // 12^50 vertices
  const AnalyticReport r = analyze(p);
  CHECK(r.order == ipow(BigInt(12), 50));
  CHECK(r.size == edge_count_closed_form(p));
  CHECK(r.metrics.diameter == 99);
  CHECK(r.class_stats.size() == 100);
}

}  // TEST_SUITE
