#include "hiernet/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hiernet {

std::vector<std::int64_t> bfs_distances(const GraphView& g, VertexId source) {
  if (source >= g.order()) throw std::out_of_range("BFS source out of range");
  std::vector<std::int64_t> dist(g.order(), -1);
  std::vector<VertexId> frontier{source};
  dist[source] = 0;
  std::uint64_t seen = 1;
  while (!frontier.empty()) {
    std::vector<VertexId> next;
    for (VertexId u : frontier) {
      for (VertexId v : g.neighbors(u)) {
        if (dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        next.push_back(v);
        ++seen;
      }
    }
    frontier = std::move(next);
  }
  if (seen != g.order())
    throw std::runtime_error("graph is not connected: BFS reached " +
                             std::to_string(seen) + " of " + std::to_string(g.order()));
  return dist;
}

EccentricityTable bfs_eccentricities(const GraphView& g) {
  EccentricityTable t;
  t.by_vertex.reserve(g.order());
  for (VertexId s = 0; s < g.order(); ++s) {
    const auto dist = bfs_distances(g, s);
    t.by_vertex.push_back(*std::max_element(dist.begin(), dist.end()));
  }
  t.radius = *std::min_element(t.by_vertex.begin(), t.by_vertex.end());
  t.diameter = *std::max_element(t.by_vertex.begin(), t.by_vertex.end());
  t.root_eccentricity = t.by_vertex.front();
  return t;
}

namespace {

// Edges inside the neighborhood of v, each counted once.
std::uint64_t neighborhood_edges(const GraphView& g, VertexId v) {
  const auto nv = g.neighbors(v);
  std::uint64_t count = 0;
  for (VertexId a : nv) {
    // Intersect N(a) with the part of N(v) beyond a.
    const auto na = g.neighbors(a);
    auto it = std::upper_bound(nv.begin(), nv.end(), a);
    auto jt = na.begin();
    while (it != nv.end() && jt != na.end()) {
      if (*it < *jt) ++it;
      else if (*jt < *it) ++jt;
      else { ++count; ++it; ++jt; }
    }
  }
  return count;
}

}  // namespace

Rational local_clustering(const GraphView& g, VertexId v) {
  const BigInt degree = g.degree(v);
  if (degree < 2) return 0;
  return {BigInt(2) * neighborhood_edges(g, v), degree * (degree - 1)};
}

TriangleCensus triangle_and_triple_census(const GraphView& g) {
  BigInt triangles = 0;
  for (const auto& [u, v] : g.edges()) {
    // Common neighbors beyond v close a triangle exactly once per triangle.
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    auto it = std::upper_bound(nu.begin(), nu.end(), v);
    auto jt = std::upper_bound(nv.begin(), nv.end(), v);
    while (it != nu.end() && jt != nv.end()) {
      if (*it < *jt) ++it;
      else if (*jt < *it) ++jt;
      else { ++triangles; ++it; ++jt; }
    }
  }
  BigInt triples = 0;
  for (VertexId v = 0; v < g.order(); ++v) triples += choose2(BigInt(g.degree(v)));
  Rational trans = 0;
  if (triples != 0) trans = Rational(3 * triangles, triples);
  return {triangles, triples, trans};
}

EmpiricalReport measure(const GraphView& g) {
  EmpiricalReport r{.params = g.params(),
                    .degree_histogram = {},
                    .radius = 0,
                    .diameter = 0,
                    .root_eccentricity = 0,
                    .clustering = 0,
                    .triangles = 0,
                    .triples = 0,
                    .transitivity = 0};

  for (VertexId v = 0; v < g.order(); ++v)
    ++r.degree_histogram[static_cast<std::int64_t>(g.degree(v))];

  const auto ecc = bfs_eccentricities(g);
  r.radius = ecc.radius;
  r.diameter = ecc.diameter;
  r.root_eccentricity = ecc.root_eccentricity;

  Rational sum = 0;
  for (VertexId v = 0; v < g.order(); ++v) sum += local_clustering(g, v);
  r.clustering = sum / Rational(BigInt(g.order()));

  const auto census = triangle_and_triple_census(g);
  r.triangles = census.triangles;
  r.triples = census.triples;
  r.transitivity = census.transitivity;
  return r;
}

LogLogFit fit_loglog(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3)
    throw std::invalid_argument("too few points for a log-log fit (need >= 3)");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    if (!(x > 0) || !(y > 0))
      throw std::domain_error("log-log fit needs strictly positive coordinates");
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const auto m = static_cast<double>(points.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0) throw std::domain_error("log-log fit is degenerate");
  const double slope = (m * sxy - sx * sy) / denom;
  return {slope, (sy - slope * sx) / m};
}

double fit_degree_exponent(std::span<const std::pair<double, double>> cumulative_points) {
  return 1.0 - fit_loglog(cumulative_points).slope;
}

double fit_clustering_exponent(std::span<const std::pair<double, double>> points) {
  return fit_loglog(points).slope;
}

namespace {

bool is_root_kind(const VertexClass& c) {
  return c.kind == VertexKind::GlobalRoot || c.kind == VertexKind::SubRoot;
}

}  // namespace

std::vector<std::pair<double, double>> degree_exponent_fit_points(const Params& p) {
  if (p.n() == 2) throw std::domain_error("gamma undefined for n=2");
  // Root classes sorted by descending degree; the cumulative count of
  // root-class vertices at degree >= that class's degree, as a fraction of all
  // vertices, traces the tail the exponent governs.
  std::vector<ClassStat> roots;
  for (ClassStat& row : class_census(p))
    if (is_root_kind(row.cls)) roots.push_back(std::move(row));
  std::sort(roots.begin(), roots.end(),
            [](const ClassStat& a, const ClassStat& b) { return a.degree > b.degree; });

  std::vector<std::pair<double, double>> points;
  points.reserve(roots.size());
  BigInt cumulative = 0;
  for (const ClassStat& row : roots) {
    cumulative += row.count;
    points.emplace_back(row.degree.convert_to<double>(),
                        to_double(Rational(cumulative, p.order())));
  }
  std::reverse(points.begin(), points.end());  // ascending degree
  return points;
}

std::vector<std::pair<double, double>> clustering_fit_points(const Params& p) {
  if (p.n() == 2)
    throw std::domain_error("clustering exponent undefined for n=2 (all coefficients 0)");
  std::vector<std::pair<double, double>> points;
  for (const ClassStat& row : class_census(p))
    if (is_root_kind(row.cls))
      points.emplace_back(row.degree.convert_to<double>(), to_double(row.clustering));
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace hiernet
