#include "hiernet/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

namespace hiernet {

namespace {

bool all_zero_from(const Label& x, std::size_t from) {
  for (std::size_t i = from; i < x.digits.size(); ++i)
    if (x.digits[i] != 0) return false;
  return true;
}

bool all_nonzero_from(const Label& x, std::size_t from) {
  for (std::size_t i = from; i < x.digits.size(); ++i)
    if (x.digits[i] == 0) return false;
  return true;
}

// 1-based position of the last nonzero digit, 0 if none.
std::size_t last_nonzero_pos(const Label& x) {
  for (std::size_t i = x.digits.size(); i-- > 0;)
    if (x.digits[i] != 0) return i + 1;
  return 0;
}

// 1-based position of the last zero digit, 0 if none.
std::size_t last_zero_pos(const Label& x) {
  for (std::size_t i = x.digits.size(); i-- > 0;)
    if (x.digits[i] == 0) return i + 1;
  return 0;
}

void check_pair(const Label& x, const Label& y, const Params& p) {
  require_valid(x, p);
  require_valid(y, p);
}

}  // namespace

bool block_rule(const Label& x, const Label& y, const Params& p) {
  check_pair(x, y, p);
  // Same innermost clique: equal on the first k-1 digits, distinct on the last.
  return x != y &&
         common_prefix_length(x, y) == static_cast<std::size_t>(p.k()) - 1;
}

bool root_peripheral_rule(const Label& x, const Label& y, const Params& p) {
  check_pair(x, y, p);
  // After the shared prefix one label is the copy's root, the other is
  // peripheral in the copy. The prefix must leave at least two digits, else
  // the "copy" is a single clique handled by the block rule.
  const std::size_t lcp = common_prefix_length(x, y);
  if (lcp + 2 > static_cast<std::size_t>(p.k())) return false;
  return (all_zero_from(x, lcp) && all_nonzero_from(y, lcp)) ||
         (all_zero_from(y, lcp) && all_nonzero_from(x, lcp));
}

bool sibling_root_rule(const Label& x, const Label& y, const Params& p) {
  check_pair(x, y, p);
  // Roots of two different sub-copies of the same copy: both continue the
  // shared prefix with a (necessarily distinct) nonzero digit, then zeros.
  const std::size_t lcp = common_prefix_length(x, y);
  if (lcp + 2 > static_cast<std::size_t>(p.k())) return false;
  return x.digits[lcp] != 0 && y.digits[lcp] != 0 &&
         all_zero_from(x, lcp + 1) && all_zero_from(y, lcp + 1);
}

bool is_adjacent(const Label& x, const Label& y, const Params& p) {
  return block_rule(x, y, p) || root_peripheral_rule(x, y, p) ||
         sibling_root_rule(x, y, p);
}

namespace {

// Appends prefix + every all-nonzero suffix of the given length.
void append_peripheral_partners(const Label& x, std::size_t prefix_len,
                                std::int64_t n, std::vector<Label>& out) {
  const std::size_t k = x.digits.size();
  Label y;
  y.digits.assign(x.digits.begin(), x.digits.begin() + static_cast<std::ptrdiff_t>(prefix_len));
  y.digits.resize(k, 1);
  while (true) {
    out.push_back(y);
    std::size_t i = k;
    while (i > prefix_len && y.digits[i - 1] == n - 1) y.digits[--i] = 1;
    if (i == prefix_len) break;
    ++y.digits[i - 1];
  }
}

}  // namespace

std::vector<Label> neighbors_of(const Label& x, const Params& p) {
  require_valid(x, p);
  const auto k = static_cast<std::size_t>(p.k());
  const std::int64_t n = p.n();
  std::vector<Label> out;

  // Block rule: the other members of x's innermost clique.
  for (Digit d = 0; d < n; ++d) {
    if (d == x.digits[k - 1]) continue;
    Label y = x;
    y.digits[k - 1] = d;
    out.push_back(std::move(y));
  }

  const std::size_t z = last_nonzero_pos(x);

  // Root side of the root-peripheral rule: x is the root of every copy whose
  // prefix it extends with zeros, i.e. prefixes of length z .. k-2.
  for (std::size_t i = z; i + 2 <= k; ++i)
    append_peripheral_partners(x, i, n, out);

  if (x.digits[k - 1] != 0) {
    // Peripheral side: x is peripheral in the copies below its last zero.
    for (std::size_t i = last_zero_pos(x); i + 2 <= k; ++i) {
      Label y;
      y.digits.assign(x.digits.begin(), x.digits.begin() + static_cast<std::ptrdiff_t>(i));
      y.digits.resize(k, 0);
      out.push_back(std::move(y));
    }
  } else if (z >= 1) {
    // Sibling sub-roots: x = prefix, nonzero digit, zeros — its level-z peers.
    for (Digit d = 1; d < n; ++d) {
      if (d == x.digits[z - 1]) continue;
      Label y = x;
      y.digits[z - 1] = d;
      out.push_back(std::move(y));
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> subgraph_vertices(std::span<const Digit> prefix, const Params& p) {
  const auto k = static_cast<std::size_t>(p.k());
  if (prefix.empty() || prefix.size() >= k)
    throw std::invalid_argument("copy prefix length must be in [1, k-1]");
  for (Digit d : prefix)
    if (d < 0 || d >= p.n())
      throw std::invalid_argument("copy prefix digit out of range");

  const BigInt total = ipow(BigInt(p.n()), static_cast<std::int64_t>(k - prefix.size()));
  std::vector<Label> out;
  out.reserve(total.convert_to<std::size_t>());

  Label y;
  y.digits.assign(prefix.begin(), prefix.end());
  y.digits.resize(k, 0);
  const std::size_t base = prefix.size();
  while (true) {
    out.push_back(y);
    std::size_t i = k;
    while (i > base && y.digits[i - 1] == p.n() - 1) y.digits[--i] = 0;
    if (i == base) break;
    ++y.digits[i - 1];
  }
  return out;
}

GraphView::GraphView(const Params& p, std::vector<Edge> edges)
    : params_(p), order_(p.order_u64()), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (v >= order_)
      throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");

  offsets_.assign(order_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::uint64_t i = 0; i < order_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
  for (std::uint64_t v = 0; v < order_; ++v)
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

GraphView GraphView::build(const Params& p, std::uint64_t vertex_cap) {
  if (!p.order_fits_u64() || p.order_u64() > vertex_cap)
    throw BudgetExceeded(
        "materializing n^k = " + p.order().str() + " vertices exceeds the cap of " +
        std::to_string(vertex_cap) + "; the closed-form and oracle paths need no graph");

  const auto n = static_cast<std::uint64_t>(p.n());

  // Level 1: the seed clique.
  std::vector<Edge> edges;
  for (std::uint64_t u = 0; u < n; ++u)
    for (std::uint64_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);

  // Ids of the all-nonzero labels at the current level.
  std::vector<std::uint64_t> peripheral;
  peripheral.reserve(n - 1);
  for (std::uint64_t d = 1; d < n; ++d) peripheral.push_back(d);

  std::uint64_t stride = n;  // n^{level-1} after the loop step below
  for (std::int64_t level = 2; level <= p.k(); ++level) {
    std::vector<Edge> next;
    next.reserve(n * edges.size() + peripheral.size() * (n - 1) + (n - 1) * (n - 2) / 2);

    // n shifted copies of the previous level.
    for (std::uint64_t copy = 0; copy < n; ++copy) {
      const std::uint64_t base = copy * stride;
      for (const auto& [u, v] : edges) next.emplace_back(base + u, base + v);
    }

    // New root-peripheral star: 0...0 to every all-nonzero label.
    std::vector<std::uint64_t> next_peripheral;
    next_peripheral.reserve(peripheral.size() * (n - 1));
    for (std::uint64_t d = 1; d < n; ++d)
      for (std::uint64_t q : peripheral) next_peripheral.push_back(d * stride + q);
    for (std::uint64_t q : next_peripheral) next.emplace_back(0, q);

    // Clique on the roots of the n-1 non-root copies.
    for (std::uint64_t a = 1; a < n; ++a)
      for (std::uint64_t b = a + 1; b < n; ++b)
        next.emplace_back(a * stride, b * stride);

    edges = std::move(next);
    peripheral = std::move(next_peripheral);
    stride *= n;
  }

  return GraphView(p, std::move(edges));
}

GraphView GraphView::from_edges(const Params& p, std::vector<Edge> edges) {
  return GraphView(p, std::move(edges));
}

std::span<const VertexId> GraphView::neighbors(VertexId v) const {
  if (v >= order_) throw std::out_of_range("vertex id out of range");
  return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
}

std::uint64_t GraphView::degree(VertexId v) const {
  if (v >= order_) throw std::out_of_range("vertex id out of range");
  return offsets_[v + 1] - offsets_[v];
}

bool GraphView::has_edge(VertexId u, VertexId v) const {
  if (u == v) return false;
  auto nu = neighbors(u);
  auto nv = neighbors(v);
  const auto& smaller = nu.size() <= nv.size() ? nu : nv;
  const VertexId target = nu.size() <= nv.size() ? v : u;
  return std::binary_search(smaller.begin(), smaller.end(), target);
}

GraphView collapse(const GraphView& g, std::int64_t level) {
  const Params& p = g.params();
  if (level < 1 || level >= p.k())
    throw std::invalid_argument("collapse level must be in [1, k-1]");

  const Params q = Params::validate(p.n(), level);
  const std::uint64_t divisor = ipow(BigInt(p.n()), p.k() - level).convert_to<std::uint64_t>();

  std::vector<Edge> merged;
  merged.reserve(g.size());
  for (const auto& [u, v] : g.edges()) {
    const std::uint64_t cu = u / divisor;
    const std::uint64_t cv = v / divisor;
    if (cu == cv) continue;
    merged.emplace_back(std::min(cu, cv), std::max(cu, cv));
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return GraphView::from_edges(q, std::move(merged));
}

}  // namespace hiernet
