#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hiernet/analytic.hpp"
#include "hiernet/graph.hpp"

namespace hiernet {

// Brute-force measurements on a materialized graph. This module deliberately
// knows nothing about the closed forms — it is the independent side of every
// cross-check.

// Hop distances from `source`; throws std::runtime_error if any vertex is
// unreachable (the family is connected, so that would be a construction bug).
std::vector<std::int64_t> bfs_distances(const GraphView& g, VertexId source);

struct EccentricityTable {
  std::vector<std::int64_t> by_vertex;
  std::int64_t radius;
  std::int64_t diameter;
  std::int64_t root_eccentricity;  // vertex 0 carries the all-zero label
};
EccentricityTable bfs_eccentricities(const GraphView& g);

// Exact local coefficient 2e(N(v)) / (deg (deg-1)); 0 for degree < 2.
Rational local_clustering(const GraphView& g, VertexId v);

struct TriangleCensus {
  BigInt triangles;
  BigInt triples;
  Rational transitivity;  // 0 when triples == 0
};
TriangleCensus triangle_and_triple_census(const GraphView& g);

struct EmpiricalReport {
  Params params;
  std::map<std::int64_t, std::uint64_t> degree_histogram;
  std::int64_t radius;
  std::int64_t diameter;
  std::int64_t root_eccentricity;
  Rational clustering;  // mean of local coefficients
  BigInt triangles;
  BigInt triples;
  Rational transitivity;
};
EmpiricalReport measure(const GraphView& g);

// Least squares on (log x, log y). Needs >= 3 points, all coordinates > 0.
struct LogLogFit {
  double slope;
  double intercept;
};
LogLogFit fit_loglog(std::span<const std::pair<double, double>> points);

// Degree exponent estimate from cumulative-distribution points: 1 - slope.
double fit_degree_exponent(std::span<const std::pair<double, double>> cumulative_points);

// Scaling exponent of clustering against degree: the slope itself.
double fit_clustering_exponent(std::span<const std::pair<double, double>> points);

// Fit inputs from the census (no graph needed). Both restrict to the root
// classes — the power-law spectrum lives there; peripheral degrees cluster
// around n + O(k) and would only pollute the fit. n >= 3.
std::vector<std::pair<double, double>>
degree_exponent_fit_points(const Params& p);
std::vector<std::pair<double, double>>
clustering_fit_points(const Params& p);

}  // namespace hiernet
