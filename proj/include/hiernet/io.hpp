#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "hiernet/analytic.hpp"
#include "hiernet/empirical.hpp"
#include "hiernet/graph.hpp"

namespace hiernet {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge list:
//   # hiernet n=<n> k=<k> vertices=<n^k> edges=<|E|>
//   u v          (one per line, u < v, ascending)
void write_edge_list(const GraphView& g, std::ostream& out);

// Exact inverse of write_edge_list. Throws FormatError on a malformed header,
// out-of-range or repeated edges, or counts that do not match the body.
GraphView read_edge_list(std::istream& in);

// Graphviz `graph` with quoted label names; node statements first, then edges.
void write_dot(const GraphView& g, std::ostream& out);

// JSON report, stable key order, exact values as decimal / "p/q" strings when
// they may not fit a double. With an empirical report attached, adds the
// measured block plus a per-metric `match` verdict; returns false iff any
// metric disagrees. `empirical` may be null.
bool write_report(const AnalyticReport& analytic, const EmpiricalReport* empirical,
                  std::ostream& out);

enum class SweepMetric { Clustering, Transitivity, Size, Diameter, GammaTheory };

std::optional<SweepMetric> parse_sweep_metric(std::string_view name);
std::string_view sweep_metric_name(SweepMetric m);

struct SweepSpec {
  std::int64_t n_start, n_stop, n_step;
  std::int64_t k_start, k_stop;
  SweepMetric metric;
};

// CSV "n,k,<metric>", one row per (n, k) in range, analytic throughout.
// Floats carry 12 significant digits; a row whose metric is undefined for its
// parameters (gamma_theory at n = 2) gets the value NA.
void run_sweep(const SweepSpec& spec, std::ostream& out);

}  // namespace hiernet
