#include "hiernet/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace hiernet {

namespace {

// S(m) = sum_{j=1}^{m} (n-1)^j
BigInt geometric_tail(std::int64_t n, std::int64_t m) {
  BigInt acc = 0, pw = 1;
  for (std::int64_t j = 1; j <= m; ++j) {
    pw *= (n - 1);
    acc += pw;
  }
  return acc;
}

BigInt class_degree(const Params& p, const VertexClass& c) {
  const std::int64_t n = p.n(), k = p.k();
  switch (c.kind) {
    case VertexKind::GlobalRoot:
      return geometric_tail(n, k);
    case VertexKind::SubRoot:
      return geometric_tail(n, k - c.level) + (n - 2);
    case VertexKind::GlobalPeripheral:
      return BigInt(n + k - 2);
    case VertexKind::SubPeripheral:
      return BigInt(n + k - c.level - 2);
  }
  throw std::logic_error("unreachable");
}

// Peripheral of an m-level copy (m = k for the global ones).
Rational peripheral_clustering(std::int64_t n, std::int64_t m) {
  const BigInt degree = n + m - 2;
  if (degree < 2) return 0;
  const BigInt b = n - 1;
  const BigInt num = b * b + (2 * m - 3) * b + 2 - 2 * m;
  const BigInt den = (n + m - 2) * (n + m - 3);
  return {num, den};
}

Rational class_clustering(const Params& p, const VertexClass& c) {
  const std::int64_t n = p.n(), k = p.k();
  // At n = 2 the root-type neighborhoods are stars or single edges; the
  // quadratic forms below degenerate to 0/0, and the coefficient is 0.
  switch (c.kind) {
    case VertexKind::GlobalRoot: {
      if (n == 2 || class_degree(p, c) < 2) return 0;
      const BigInt num = BigInt(n - 2) * (n - 2);
      const BigInt den = ipow(BigInt(n - 1), k + 1) - 2 * n + 3;
      return {num, den};
    }
    case VertexKind::SubRoot: {
      if (n == 2 || class_degree(p, c) < 2) return 0;
      const BigInt num = BigInt(n - 2) * (n - 2);
      const BigInt den =
          ipow(BigInt(n - 1), k - c.level + 1) + BigInt(n - 1) * (n - 1) - 3 * n + 4;
      return {num, den};
    }
    case VertexKind::GlobalPeripheral:
      return peripheral_clustering(n, k);
    case VertexKind::SubPeripheral:
      return peripheral_clustering(n, k - c.level);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

BigInt edge_count(const Params& p) {
  const std::int64_t n = p.n(), k = p.k();
  // Innermost cliques, one root-peripheral star per level, one sibling clique
  // per copy above level 1.
  BigInt total = ipow(BigInt(n), k - 1) * choose2(BigInt(n));
  for (std::int64_t i = 2; i <= k; ++i)
    total += ipow(BigInt(n), k - i) * ipow(BigInt(n - 1), i);
  BigInt copies = 0;
  for (std::int64_t i = 0; i + 2 <= k; ++i) copies += ipow(BigInt(n), i);
  total += choose2(BigInt(n - 1)) * copies;
  return total;
}

BigInt edge_count_closed_form(const Params& p) {
  const BigInt n(p.n());
  const std::int64_t k = p.k();
  return exact_div(3 * ipow(n, k + 1) - n, 2) - ipow(n - 1, k + 1) -
         2 * ipow(n, k) + 1;
}

BigInt edge_count_recurrence(const Params& p) {
  const std::int64_t n = p.n();
  BigInt e = choose2(BigInt(n));
  for (std::int64_t level = 2; level <= p.k(); ++level)
    e = n * e + ipow(BigInt(n - 1), level) + choose2(BigInt(n - 1));
  return e;
}

MetricSummary metric_closed(const Params& p) {
  return {p.k(), 2 * p.k() - 1, p.k()};
}

std::vector<ClassStat> class_census(const Params& p) {
  const std::int64_t n = p.n(), k = p.k();
  std::vector<ClassStat> rows;
  rows.reserve(static_cast<std::size_t>(2 * k));

  auto add = [&](VertexClass c, BigInt count) {
    rows.push_back({c, std::move(count), class_degree(p, c), class_clustering(p, c)});
  };

  add({VertexKind::GlobalRoot, 0}, 1);
  for (std::int64_t i = 1; i < k; ++i)
    add({VertexKind::SubRoot, i}, BigInt(n - 1) * ipow(BigInt(n), i - 1));
  add({VertexKind::GlobalPeripheral, 0}, ipow(BigInt(n - 1), k));
  for (std::int64_t i = 1; i < k; ++i)
    add({VertexKind::SubPeripheral, i},
        ipow(BigInt(n), i - 1) * ipow(BigInt(n - 1), k - i));
  return rows;
}

AverageDegree average_degree(const Params& p) {
  return {Rational(2 * edge_count(p), p.order()),
          BigInt(p.n()) + 2 * BigInt(p.k()) - 2};
}

Rational clustering_coefficient(const Params& p) {
  Rational sum = 0;
  for (const ClassStat& row : class_census(p))
    sum += Rational(row.count) * row.clustering;
  return sum / Rational(p.order());
}

BigInt triangle_count(const Params& p) {
  const BigInt n(p.n());
  const std::int64_t k = p.k();
  const BigInt num =
      (n - 2) * (3 - n - 3 * ipow(n - 1, k + 1) + 2 * (2 * n - 3) * ipow(n, k));
  return exact_div(num, 6);
}

BigInt triangle_count_recurrence(const Params& p) {
  const std::int64_t n = p.n();
  BigInt t = choose3(BigInt(n));
  // Each new level adds, per peripheral vertex, the C(n-1,2) edges it closes
  // with the root... summed: (n-1)^{level-1} C(n-1,2) star triangles, plus the
  // C(n-1,3) triangles inside the sibling-root clique.
  for (std::int64_t level = 2; level <= p.k(); ++level)
    t = n * t + ipow(BigInt(n - 1), level - 1) * choose2(BigInt(n - 1)) +
        choose3(BigInt(n - 1));
  return t;
}

BigInt triple_count(const Params& p) {
  BigInt total = 0;
  for (const ClassStat& row : class_census(p)) total += row.count * choose2(row.degree);
  return total;
}

Rational transitivity(const Params& p) {
  const BigInt triples = triple_count(p);
  if (triples == 0) return 0;  // K_2: no paths of length two
  return {3 * triangle_count(p), triples};
}

double degree_exponent(const Params& p) {
  if (p.n() == 2) throw std::domain_error("gamma undefined for n=2");
  const auto n = static_cast<double>(p.n());
  return 1.0 + std::log(n) / std::log(n - 1.0);
}

Rational cumulative_degree_fraction(const Params& p, const BigInt& min_degree) {
  BigInt hits = 0;
  for (const ClassStat& row : class_census(p))
    if (row.degree >= min_degree) hits += row.count;
  return {hits, p.order()};
}

std::int64_t distance_upper_bound(const Label& x, const Label& y, const Params& p) {
  require_valid(x, p);
  require_valid(y, p);
  if (x == y) return 0;
  const auto lcp = static_cast<std::int64_t>(common_prefix_length(x, y));
  return 2 * (p.k() - lcp) - 1;
}

AnalyticReport analyze(const Params& p) {
  AnalyticReport r{
      .params = p,
      .order = p.order(),
      .size = edge_count(p),
      .metrics = metric_closed(p),
      .avg_degree = average_degree(p),
      .clustering = clustering_coefficient(p),
      .triangles = triangle_count(p),
      .triples = triple_count(p),
      .transitivity = hiernet::transitivity(p),
      .degree_exponent = std::nullopt,
      .class_stats = class_census(p),
  };
  if (p.n() > 2) r.degree_exponent = hiernet::degree_exponent(p);
  return r;
}

}  // namespace hiernet
