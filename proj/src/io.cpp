#include "hiernet/io.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hiernet {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kHeaderTag = "# hiernet";

}  // namespace

void write_edge_list(const GraphView& g, std::ostream& out) {
  out << kHeaderTag << " n=" << g.params().n() << " k=" << g.params().k()
      << " vertices=" << g.params().order().str() << " edges=" << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

GraphView read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(kHeaderTag, 0) != 0)
    throw FormatError("edge list: missing '" + std::string(kHeaderTag) + "' header");

  std::int64_t n = -1, k = -1;
  std::uint64_t vertices = 0, edge_count = 0;
  bool have_n = false, have_k = false, have_v = false, have_e = false;
  std::istringstream header(line.substr(kHeaderTag.size()));
  std::string field;
  while (header >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos)
      throw FormatError("edge list: malformed header field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    try {
      std::size_t used = 0;
      if (key == "n") { n = std::stoll(value, &used); have_n = true; }
      else if (key == "k") { k = std::stoll(value, &used); have_k = true; }
      else if (key == "vertices") { vertices = std::stoull(value, &used); have_v = true; }
      else if (key == "edges") { edge_count = std::stoull(value, &used); have_e = true; }
      else throw FormatError("edge list: unknown header field '" + key + "'");
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw FormatError("edge list: bad header value '" + field + "'");
    }
  }
  if (!(have_n && have_k && have_v && have_e))
    throw FormatError("edge list: header must carry n, k, vertices, edges");

  Params p = [&] {
    try {
      return Params::validate(n, k);
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("edge list: ") + e.what());
    }
  }();
  if (!p.order_fits_u64() || p.order_u64() != vertices)
    throw FormatError("edge list: vertices=" + std::to_string(vertices) +
                      " does not equal n^k = " + p.order().str());

  std::vector<Edge> edges;
  edges.reserve(edge_count);
  std::uint64_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::uint64_t u, v;
    if (!(row >> u >> v) || (row >> field))
      throw FormatError("edge list: malformed line " + std::to_string(lineno));
    edges.emplace_back(u, v);
  }
  if (edges.size() != edge_count)
    throw FormatError("edge list: header promises " + std::to_string(edge_count) +
                      " edges, body has " + std::to_string(edges.size()));
  try {
    return GraphView::from_edges(p, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

void write_dot(const GraphView& g, std::ostream& out) {
  const Params& p = g.params();
  out << "graph hiernet_n" << p.n() << "_k" << p.k() << " {\n";
  for (std::uint64_t v = 0; v < g.order(); ++v)
    out << "  \"" << format_label(label_from_index(v, p), p) << "\";\n";
  for (const auto& [u, v] : g.edges())
    out << "  \"" << format_label(label_from_index(u, p), p) << "\" -- \""
        << format_label(label_from_index(v, p), p) << "\";\n";
  out << "}\n";
}

namespace {

// Exact integers: JSON number while they fit, decimal string beyond.
Json json_int(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

Json json_rational(const Rational& q) {
  return Json{{"exact", fraction_string(q)}, {"float", to_double(q)}};
}

Json class_row(const ClassStat& row) {
  Json j;
  switch (row.cls.kind) {
    case VertexKind::GlobalRoot: j["class"] = "root"; break;
    case VertexKind::SubRoot: j["class"] = "sub-root"; break;
    case VertexKind::GlobalPeripheral: j["class"] = "peripheral"; break;
    case VertexKind::SubPeripheral: j["class"] = "sub-peripheral"; break;
  }
  if (row.cls.kind == VertexKind::SubRoot || row.cls.kind == VertexKind::SubPeripheral)
    j["level"] = row.cls.level;
  j["count"] = json_int(row.count);
  j["degree"] = json_int(row.degree);
  j["clustering"] = json_rational(row.clustering);
  return j;
}

std::map<std::int64_t, BigInt> census_histogram(const AnalyticReport& a) {
  std::map<std::int64_t, BigInt> hist;
  for (const ClassStat& row : a.class_stats)
    hist[row.degree.convert_to<std::int64_t>()] += row.count;
  return hist;
}

}  // namespace

bool write_report(const AnalyticReport& analytic, const EmpiricalReport* empirical,
                  std::ostream& out) {
  Json j;
  j["params"] = Json{{"n", analytic.params.n()}, {"k", analytic.params.k()}};
  j["order"] = json_int(analytic.order);
  j["size"] = json_int(analytic.size);
  j["radius"] = analytic.metrics.radius;
  j["diameter"] = analytic.metrics.diameter;
  j["root_eccentricity"] = analytic.metrics.root_eccentricity;
  j["avg_degree"] = Json{{"exact", fraction_string(analytic.avg_degree.exact)},
                         {"float", to_double(analytic.avg_degree.exact)},
                         {"asymptotic", json_int(analytic.avg_degree.asymptotic)}};
  j["clustering"] = json_rational(analytic.clustering);
  j["triangles"] = json_int(analytic.triangles);
  j["triples"] = json_int(analytic.triples);
  j["transitivity"] = json_rational(analytic.transitivity);
  j["gamma_theory"] =
      analytic.degree_exponent ? Json(*analytic.degree_exponent) : Json(nullptr);
  j["class_stats"] = Json::array();
  for (const ClassStat& row : analytic.class_stats)
    j["class_stats"].push_back(class_row(row));

  bool all_match = true;
  if (empirical) {
    if (!(empirical->params == analytic.params))
      throw std::invalid_argument("report: analytic and empirical params differ");

    Json e;
    e["degree_histogram"] = Json::object();
    for (const auto& [degree, count] : empirical->degree_histogram)
      e["degree_histogram"][std::to_string(degree)] = count;
    e["radius"] = empirical->radius;
    e["diameter"] = empirical->diameter;
    e["root_eccentricity"] = empirical->root_eccentricity;
    e["clustering"] = json_rational(empirical->clustering);
    e["triangles"] = json_int(empirical->triangles);
    e["triples"] = json_int(empirical->triples);
    e["transitivity"] = json_rational(empirical->transitivity);
    j["empirical"] = std::move(e);

    std::map<std::int64_t, BigInt> expected = census_histogram(analytic);
    std::map<std::int64_t, BigInt> measured;
    BigInt degree_total = 0;
    for (const auto& [degree, count] : empirical->degree_histogram) {
      measured[degree] = count;
      degree_total += BigInt(degree) * count;
    }

    Json match;
    auto put = [&](const char* key, bool ok) {
      match[key] = ok;
      all_match = all_match && ok;
    };
    put("size", degree_total == 2 * analytic.size);
    put("degree_histogram", measured == expected);
    put("radius", empirical->radius == analytic.metrics.radius);
    put("diameter", empirical->diameter == analytic.metrics.diameter);
    put("root_eccentricity",
        empirical->root_eccentricity == analytic.metrics.root_eccentricity);
    put("clustering", empirical->clustering == analytic.clustering);
    put("triangles", empirical->triangles == analytic.triangles);
    put("triples", empirical->triples == analytic.triples);
    put("transitivity", empirical->transitivity == analytic.transitivity);
    match["all"] = all_match;
    j["match"] = std::move(match);
  }

  out << j.dump(2) << '\n';
  return all_match;
}

std::optional<SweepMetric> parse_sweep_metric(std::string_view name) {
  if (name == "clustering") return SweepMetric::Clustering;
  if (name == "transitivity") return SweepMetric::Transitivity;
  if (name == "size") return SweepMetric::Size;
  if (name == "diameter") return SweepMetric::Diameter;
  if (name == "gamma_theory") return SweepMetric::GammaTheory;
  return std::nullopt;
}

std::string_view sweep_metric_name(SweepMetric m) {
  switch (m) {
    case SweepMetric::Clustering: return "clustering";
    case SweepMetric::Transitivity: return "transitivity";
    case SweepMetric::Size: return "size";
    case SweepMetric::Diameter: return "diameter";
    case SweepMetric::GammaTheory: return "gamma_theory";
  }
  return "?";
}

void run_sweep(const SweepSpec& spec, std::ostream& out) {
  if (spec.n_step < 1) throw std::invalid_argument("sweep: n step must be >= 1");
  if (spec.n_start < 2) throw std::invalid_argument("sweep: n must be >= 2");
  if (spec.k_start < 1) throw std::invalid_argument("sweep: k must be >= 1");
  if (spec.n_stop < spec.n_start || spec.k_stop < spec.k_start)
    throw std::invalid_argument("sweep: empty range");

  out << "n,k," << sweep_metric_name(spec.metric) << '\n';
  for (std::int64_t n = spec.n_start; n <= spec.n_stop; n += spec.n_step) {
    for (std::int64_t k = spec.k_start; k <= spec.k_stop; ++k) {
      const Params p = Params::validate(n, k);
      std::string cell;
      switch (spec.metric) {
        case SweepMetric::Clustering:
          cell = float_string(to_double(clustering_coefficient(p)));
          break;
        case SweepMetric::Transitivity:
          cell = float_string(to_double(transitivity(p)));
          break;
        case SweepMetric::Size:
          cell = edge_count(p).str();
          break;
        case SweepMetric::Diameter:
          cell = std::to_string(metric_closed(p).diameter);
          break;
        case SweepMetric::GammaTheory:
          // Undefined at n = 2: flag the row, keep the sweep going.
          cell = n == 2 ? "NA" : float_string(degree_exponent(p));
          break;
      }
      out << n << ',' << k << ',' << cell << '\n';
    }
  }
}

}  // namespace hiernet
