#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hiernet/label.hpp"

namespace hiernet {

// Everything in this header is closed-form: label arithmetic only, no graph.

BigInt edge_count(const Params& p);              // per-level sum (reference form)
BigInt edge_count_closed_form(const Params& p);  // single closed expression
BigInt edge_count_recurrence(const Params& p);   // E_k = n E_{k-1} + (n-1)^k + C(n-1,2)

struct MetricSummary {
  std::int64_t radius;              // k, attained by the root
  std::int64_t diameter;            // 2k - 1
  std::int64_t root_eccentricity;   // k
};
MetricSummary metric_closed(const Params& p);

// One row per vertex class: how many vertices, their common degree, their
// common local clustering coefficient (exact, with the degree<2 and n=2
// conventions already applied).
struct ClassStat {
  VertexClass cls;
  BigInt count;
  BigInt degree;
  Rational clustering;
};
std::vector<ClassStat> class_census(const Params& p);

struct AverageDegree {
  Rational exact;      // 2|E| / n^k
  BigInt asymptotic;   // n + 2k - 2
};
AverageDegree average_degree(const Params& p);

// Mean of the local coefficients over all vertices.
Rational clustering_coefficient(const Params& p);

BigInt triangle_count(const Params& p);
BigInt triangle_count_recurrence(const Params& p);
BigInt triple_count(const Params& p);  // sum over vertices of C(degree, 2)

// 3 * triangles / triples; 0 when there are no triples (K_2 only).
Rational transitivity(const Params& p);

// Power-law exponent 1 + ln n / ln(n-1); throws std::domain_error for n = 2.
double degree_exponent(const Params& p);

// Fraction of vertices with degree >= min_degree, exact.
Rational cumulative_degree_fraction(const Params& p, const BigInt& min_degree);

// 2(k - L) - 1 where L is the common prefix length: an a-priori distance cap
// for any two distinct vertices.
std::int64_t distance_upper_bound(const Label& x, const Label& y, const Params& p);

struct AnalyticReport {
  Params params;
  BigInt order;
  BigInt size;
  MetricSummary metrics;
  AverageDegree avg_degree;
  Rational clustering;
  BigInt triangles;
  BigInt triples;
  Rational transitivity;
  std::optional<double> degree_exponent;  // empty for n = 2
  std::vector<ClassStat> class_stats;
};
AnalyticReport analyze(const Params& p);

}  // namespace hiernet
