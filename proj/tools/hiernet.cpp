// hiernet — deterministic hierarchical clique-nested graphs.
//
// generate : materialize a graph as an edge list or DOT
// stats    : closed-form metrics, optionally cross-checked against brute force
// verify   : the full invariant suite on a materialized instance
// dist     : O(k) label-to-label distance, optionally BFS-checked
// sweep    : CSV of one metric over an (n, k) range, closed forms only
//
// Exit codes: 0 success, 1 verification/cross-check failure, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hiernet/analytic.hpp"
#include "hiernet/empirical.hpp"
#include "hiernet/graph.hpp"
#include "hiernet/io.hpp"
#include "hiernet/oracle.hpp"

namespace {

using namespace hiernet;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct OutputSink {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit OutputSink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    stream = &file;
  }
  std::ostream& out() { return *stream; }
};

struct Range {
  std::int64_t start, stop, step;
};

Range parse_range(const std::string& text, bool allow_step) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(':', pos), text.size());
    parts.push_back(text.substr(pos, next - pos));
    if (next == text.size()) break;
    pos = next + 1;
  }
  const std::size_t max_parts = allow_step ? 3 : 2;
  if (parts.empty() || parts.size() > max_parts)
    throw std::invalid_argument("bad range '" + text + "' (want START:STOP" +
                                (allow_step ? "[:STEP]" : "") + ")");
  Range r{0, 0, 1};
  try {
    std::size_t used = 0;
    r.start = std::stoll(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(text);
    r.stop = parts.size() > 1 ? std::stoll(parts[1], &used) : r.start;
    if (parts.size() > 1 && used != parts[1].size()) throw std::invalid_argument(text);
    if (parts.size() > 2) {
      r.step = std::stoll(parts[2], &used);
      if (used != parts[2].size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + text + "'");
  }
  return r;
}

// ---- stats ----------------------------------------------------------------

std::map<std::int64_t, BigInt> expected_histogram(const AnalyticReport& a) {
  std::map<std::int64_t, BigInt> hist;
  for (const ClassStat& row : a.class_stats)
    hist[row.degree.convert_to<std::int64_t>()] += row.count;
  return hist;
}

void print_analytic_text(const AnalyticReport& a, std::ostream& out) {
  out << "hierarchical graph (n=" << a.params.n() << ", k=" << a.params.k() << ")\n";
  out << "  order              " << a.order.str() << '\n';
  out << "  size               " << a.size.str() << '\n';
  out << "  radius             " << a.metrics.radius << '\n';
  out << "  diameter           " << a.metrics.diameter << '\n';
  out << "  root eccentricity  " << a.metrics.root_eccentricity << '\n';
  out << "  average degree     " << fraction_string(a.avg_degree.exact) << " = "
      << float_string(to_double(a.avg_degree.exact)) << "  (asymptotic "
      << a.avg_degree.asymptotic.str() << ")\n";
  out << "  clustering         " << fraction_string(a.clustering) << " = "
      << float_string(to_double(a.clustering)) << '\n';
  out << "  triangles          " << a.triangles.str() << '\n';
  out << "  triples            " << a.triples.str() << '\n';
  out << "  transitivity       " << fraction_string(a.transitivity) << " = "
      << float_string(to_double(a.transitivity)) << '\n';
  if (a.degree_exponent)
    out << "  degree exponent    " << float_string(*a.degree_exponent) << '\n';
  else
    out << "  degree exponent    undefined for n=2\n";
  out << "  classes (count / degree / clustering):\n";
  for (const ClassStat& row : a.class_stats)
    out << "    " << class_name(row.cls) << "  " << row.count.str() << " / "
        << row.degree.str() << " / " << fraction_string(row.clustering) << '\n';
}

bool print_both_text(const AnalyticReport& a, const EmpiricalReport& e,
                     std::ostream& out) {
  print_analytic_text(a, out);

  BigInt degree_total = 0;
  std::map<std::int64_t, BigInt> measured;
  for (const auto& [degree, count] : e.degree_histogram) {
    measured[degree] = count;
    degree_total += BigInt(degree) * count;
  }

  bool all = true;
  auto row = [&](const char* name, const std::string& got, bool ok) {
    out << "    " << name << "  " << got << (ok ? "  == closed form" : "  MISMATCH")
        << '\n';
    all = all && ok;
  };
  out << "  measured:\n";
  row("size", BigInt(degree_total / 2).str(), degree_total == 2 * a.size);
  row("degree histogram", std::to_string(e.degree_histogram.size()) + " bins",
      measured == expected_histogram(a));
  row("radius", std::to_string(e.radius), e.radius == a.metrics.radius);
  row("diameter", std::to_string(e.diameter), e.diameter == a.metrics.diameter);
  row("root eccentricity", std::to_string(e.root_eccentricity),
      e.root_eccentricity == a.metrics.root_eccentricity);
  row("clustering", fraction_string(e.clustering), e.clustering == a.clustering);
  row("triangles", e.triangles.str(), e.triangles == a.triangles);
  row("triples", e.triples.str(), e.triples == a.triples);
  row("transitivity", fraction_string(e.transitivity),
      e.transitivity == a.transitivity);
  out << "  verdict: " << (all ? "all metrics match" : "MISMATCH") << '\n';
  return all;
}

// ---- verify ---------------------------------------------------------------

class CheckTable {
 public:
  explicit CheckTable(std::ostream& out) : out_(out) {}

  void pass(const std::string& name, const std::string& note = "") {
    emit(name, true, note);
  }
  void fail(const std::string& name, const std::string& note) {
    emit(name, false, note);
  }
  bool all_passed() const { return all_; }

 private:
  void emit(const std::string& name, bool ok, const std::string& note) {
    out_ << (ok ? "PASS  " : "FAIL  ") << name;
    if (!note.empty()) out_ << "  (" << note << ")";
    out_ << '\n';
    all_ = all_ && ok;
  }

  std::ostream& out_;
  bool all_ = true;
};

bool run_verify(const Params& p, std::uint64_t cap, std::ostream& out) {
  CheckTable table(out);
  const GraphView g = GraphView::build(p, cap);
  const std::uint64_t order = g.order();

  std::vector<Label> labels;
  labels.reserve(order);
  for (std::uint64_t v = 0; v < order; ++v) labels.push_back(label_from_index(v, p));

  // Construction against the adjacency rules, pairwise (quadratic, by design).
  {
    std::uint64_t rule_edges = 0;
    std::optional<std::string> defect;
    for (std::uint64_t u = 0; u < order && !defect; ++u) {
      for (std::uint64_t v = u + 1; v < order; ++v) {
        const int hits = (block_rule(labels[u], labels[v], p) ? 1 : 0) +
                         (root_peripheral_rule(labels[u], labels[v], p) ? 1 : 0) +
                         (sibling_root_rule(labels[u], labels[v], p) ? 1 : 0);
        const bool edge = g.has_edge(u, v);
        if (hits > 1 || (hits == 1) != edge) {
          defect = format_label(labels[u], p) + " ~ " + format_label(labels[v], p) +
                   (hits > 1 ? " matches " + std::to_string(hits) + " rules"
                    : edge   ? " built but matches no rule"
                             : " required by a rule but absent");
          break;
        }
        rule_edges += hits;
      }
    }
    if (defect) table.fail("construction", *defect);
    else if (rule_edges != g.size())
      table.fail("construction", "rule edges " + std::to_string(rule_edges) +
                                     " != built " + std::to_string(g.size()));
    else
      table.pass("construction",
                 std::to_string(g.size()) + " edges, rules disjoint");
  }

  const auto census = class_census(p);

  // Class census: counts and degrees per class.
  {
    std::map<VertexClass, std::uint64_t> counts;
    std::optional<std::string> defect;
    for (std::uint64_t v = 0; v < order; ++v) {
      const VertexClass c = classify(labels[v], p);
      ++counts[c];
      const auto it =
          std::find_if(census.begin(), census.end(),
                       [&](const ClassStat& row) { return row.cls == c; });
      if (it == census.end()) {
        defect = "class of " + format_label(labels[v], p) + " missing from census";
        break;
      }
      if (it->degree != g.degree(v)) {
        defect = format_label(labels[v], p) + " degree " +
                 std::to_string(g.degree(v)) + " != " + it->degree.str();
        break;
      }
    }
    if (!defect) {
      for (const ClassStat& row : census) {
        const auto it = counts.find(row.cls);
        const BigInt seen = it == counts.end() ? BigInt(0) : BigInt(it->second);
        if (seen != row.count) {
          defect = class_name(row.cls) + " count " + seen.str() + " != " +
                   row.count.str();
          break;
        }
      }
    }
    if (defect) table.fail("class census", *defect);
    else table.pass("class census", std::to_string(census.size()) + " classes");
  }

  // Size: all three closed forms against the materialized count.
  {
    const BigInt sum = edge_count(p);
    const BigInt closed = edge_count_closed_form(p);
    const BigInt rec = edge_count_recurrence(p);
    if (sum != closed || sum != rec || BigInt(g.size()) != sum)
      table.fail("size", "built " + std::to_string(g.size()) + ", sum " + sum.str() +
                             ", closed " + closed.str() + ", recurrence " + rec.str());
    else
      table.pass("size", sum.str() + " edges, three forms agree");
  }

  // Degree histogram and the handshake identity.
  {
    std::map<std::int64_t, BigInt> measured;
    BigInt degree_total = 0;
    for (std::uint64_t v = 0; v < order; ++v) {
      ++measured[static_cast<std::int64_t>(g.degree(v))];
      degree_total += g.degree(v);
    }
    std::map<std::int64_t, BigInt> expected;
    for (const ClassStat& row : census)
      expected[row.degree.convert_to<std::int64_t>()] += row.count;
    if (measured != expected)
      table.fail("degree histogram", "bins disagree with census");
    else if (degree_total != 2 * edge_count(p))
      table.fail("degree histogram", "degree sum != 2|E|");
    else
      table.pass("degree histogram", std::to_string(measured.size()) + " bins");
  }

  // Radius, diameter, root eccentricity, diametral pair.
  {
    const auto ecc = bfs_eccentricities(g);
    const auto closed = metric_closed(p);
    const auto [za, zb] = diametral_pair(p);
    const auto dist_from_za = bfs_distances(g, index_of(za, p));
    const std::int64_t witness = dist_from_za[index_of(zb, p)];
    if (ecc.radius != closed.radius || ecc.diameter != closed.diameter ||
        ecc.root_eccentricity != closed.root_eccentricity)
      table.fail("radius/diameter",
                 "BFS " + std::to_string(ecc.radius) + "/" + std::to_string(ecc.diameter) +
                     "/" + std::to_string(ecc.root_eccentricity) + " vs closed " +
                     std::to_string(closed.radius) + "/" + std::to_string(closed.diameter) +
                     "/" + std::to_string(closed.root_eccentricity));
    else if (witness != closed.diameter)
      table.fail("radius/diameter", "alternating pair at " + std::to_string(witness) +
                                        " != " + std::to_string(closed.diameter));
    else
      table.pass("radius/diameter", std::to_string(closed.radius) + " / " +
                                        std::to_string(closed.diameter));
  }

  // Local clustering per vertex against its class, mean against closed form.
  {
    std::optional<std::string> defect;
    Rational sum = 0;
    for (std::uint64_t v = 0; v < order; ++v) {
      const Rational c = local_clustering(g, v);
      sum += c;
      const VertexClass cls = classify(labels[v], p);
      const auto it =
          std::find_if(census.begin(), census.end(),
                       [&](const ClassStat& row) { return row.cls == cls; });
      if (it != census.end() && c != it->clustering) {
        defect = format_label(labels[v], p) + " clustering " + fraction_string(c) +
                 " != " + fraction_string(it->clustering);
        break;
      }
    }
    if (!defect && sum / Rational(BigInt(order)) != clustering_coefficient(p))
      defect = "mean clustering != closed form";
    if (defect) table.fail("clustering", *defect);
    else table.pass("clustering", fraction_string(clustering_coefficient(p)));
  }

  // Triangles, triples, transitivity.
  {
    const auto tc = triangle_and_triple_census(g);
    if (tc.triangles != triangle_count(p) ||
        tc.triangles != triangle_count_recurrence(p) ||
        tc.triples != triple_count(p) || tc.transitivity != transitivity(p))
      table.fail("triangles/triples",
                 "measured " + tc.triangles.str() + "/" + tc.triples.str() +
                     " vs closed " + triangle_count(p).str() + "/" + triple_count(p).str());
    else
      table.pass("triangles/triples",
                 tc.triangles.str() + " / " + tc.triples.str());
  }

  // Distance oracle against BFS, all pairs, plus the prefix bound.
  {
    std::optional<std::string> defect;
    std::uint64_t pairs = 0;
    for (std::uint64_t u = 0; u < order && !defect; ++u) {
      const auto dist = bfs_distances(g, u);
      for (std::uint64_t v = u; v < order; ++v) {
        const std::int64_t d = oracle_distance(labels[u], labels[v], p);
        if (d != dist[v]) {
          defect = format_label(labels[u], p) + " -> " + format_label(labels[v], p) +
                   ": oracle " + std::to_string(d) + ", BFS " + std::to_string(dist[v]);
          break;
        }
        if (u != v && d > distance_upper_bound(labels[u], labels[v], p)) {
          defect = format_label(labels[u], p) + " -> " + format_label(labels[v], p) +
                   " exceeds the prefix bound";
          break;
        }
        ++pairs;
      }
    }
    if (defect) table.fail("distance oracle", *defect);
    else table.pass("distance oracle", std::to_string(pairs) + " pairs vs BFS");
  }

  return table.all_passed();
}

// ---- main -----------------------------------------------------------------

int dispatch(CLI::App& app,
             const std::int64_t n, const std::int64_t k, const std::uint64_t cap,
             const std::string& out_path, const std::string& format,
             const std::string& mode, const bool as_json,
             const std::string& dist_x, const std::string& dist_y, const bool check_bfs,
             const std::string& n_range, const std::string& k_range,
             const std::string& metric_name) {
  if (app.got_subcommand("generate")) {
    const Params p = Params::validate(n, k);
    OutputSink sink(out_path);
    const GraphView g = GraphView::build(p, cap);
    if (format == "dot") write_dot(g, sink.out());
    else write_edge_list(g, sink.out());
    return kExitOk;
  }

  if (app.got_subcommand("stats")) {
    const Params p = Params::validate(n, k);
    OutputSink sink(out_path);
    const AnalyticReport a = analyze(p);
    if (mode == "analytic") {
      if (as_json) write_report(a, nullptr, sink.out());
      else print_analytic_text(a, sink.out());
      return kExitOk;
    }
    const GraphView g = GraphView::build(p, cap);
    const EmpiricalReport e = measure(g);
    const bool ok = as_json ? write_report(a, &e, sink.out())
                            : print_both_text(a, e, sink.out());
    // `empirical` shows the measurements; `both` additionally gates on them.
    if (mode == "both" && !ok) return kExitVerifyFailed;
    return kExitOk;
  }

  if (app.got_subcommand("verify")) {
    const Params p = Params::validate(n, k);
    OutputSink sink(out_path);
    return run_verify(p, cap, sink.out()) ? kExitOk : kExitVerifyFailed;
  }

  if (app.got_subcommand("dist")) {
    const Params p = Params::validate(n, k);
    OutputSink sink(out_path);
    const Label x = parse_label(dist_x, p);
    const Label y = parse_label(dist_y, p);
    const std::int64_t d = oracle_distance(x, y, p);
    sink.out() << d << '\n';
    if (check_bfs) {
      const GraphView g = GraphView::build(p, cap);
      const auto dist = bfs_distances(g, index_of(x, p));
      const std::int64_t measured = dist[index_of(y, p)];
      if (measured != d) {
        std::cerr << "oracle/BFS mismatch: oracle " << d << ", BFS " << measured << '\n';
        return kExitVerifyFailed;
      }
      if (x != y && d > distance_upper_bound(x, y, p)) {
        std::cerr << "distance exceeds the prefix bound\n";
        return kExitVerifyFailed;
      }
    }
    return kExitOk;
  }

  // sweep
  const Range nr = parse_range(n_range, /*allow_step=*/true);
  const Range kr = parse_range(k_range, /*allow_step=*/false);
  const auto metric = parse_sweep_metric(metric_name);
  if (!metric) throw std::invalid_argument("unknown metric '" + metric_name + "'");
  OutputSink sink(out_path);
  run_sweep({nr.start, nr.stop, nr.step, kr.start, kr.stop, *metric}, sink.out());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hiernet: hierarchical clique-nested graphs — exact analytics, O(k) distance "
      "oracle, brute-force verification"};
  app.require_subcommand(1);

  std::int64_t n = 0, k = 0;
  std::uint64_t cap = kDefaultVertexCap;
  std::string out_path, format = "edgelist", mode = "analytic";
  bool as_json = false, check_bfs = false;
  std::string dist_x, dist_y, n_range, k_range = "1:1", metric_name;

  const auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("-n", n, "copies per level (>= 2)")->required();
    cmd->add_option("-k", k, "nesting depth (>= 1)")->required();
  };
  const auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap", cap, "materialization cap in vertices")
        ->capture_default_str();
  };
  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", out_path, "write to a file instead of stdout");
  };

  CLI::App* gen = app.add_subcommand("generate", "materialize the graph");
  add_params(gen);
  add_cap(gen);
  add_output(gen);
  gen->add_option("--format", format, "edgelist or dot")
      ->check(CLI::IsMember({"edgelist", "dot"}))
      ->capture_default_str();

  CLI::App* stats = app.add_subcommand("stats", "report the graph's metrics");
  add_params(stats);
  add_cap(stats);
  add_output(stats);
  stats->add_option("--mode", mode, "analytic, empirical, or both")
      ->check(CLI::IsMember({"analytic", "empirical", "both"}))
      ->capture_default_str();
  stats->add_flag("--json", as_json, "emit the JSON report");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  add_params(verify);
  add_cap(verify);
  add_output(verify);

  CLI::App* dist = app.add_subcommand("dist", "distance between two labels");
  add_params(dist);
  add_cap(dist);
  add_output(dist);
  dist->add_option("--from", dist_x, "source label")->required();
  dist->add_option("--to", dist_y, "target label")->required();
  dist->add_flag("--check-bfs", check_bfs, "cross-check against BFS");

  CLI::App* sweep = app.add_subcommand("sweep", "CSV of a metric over a range");
  add_output(sweep);
  sweep->add_option("--n-range", n_range, "START:STOP[:STEP]")->required();
  sweep->add_option("--k-range", k_range, "START:STOP")->capture_default_str();
  sweep->add_option("--metric", metric_name,
                    "clustering, transitivity, size, diameter, or gamma_theory")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return dispatch(app, n, k, cap, out_path, format, mode, as_json, dist_x, dist_y,
                    check_bfs, n_range, k_range, metric_name);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
