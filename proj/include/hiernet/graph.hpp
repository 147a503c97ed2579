#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hiernet/label.hpp"

namespace hiernet {

using VertexId = std::uint64_t;
using Edge = std::pair<VertexId, VertexId>;  // stored with first < second

inline constexpr std::uint64_t kDefaultVertexCap = std::uint64_t{1} << 20;

// Thrown when an operation would materialize more vertices than its cap allows.
// The analytic and oracle paths never materialize anything; this is the signal
// to use those instead.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The three disjoint adjacency families. Two distinct labels are adjacent iff
// exactly one predicate holds:
//   block_rule        — same (k-1)-prefix, i.e. same innermost clique;
//   root_peripheral   — one endpoint is the root of a copy (all zeros after the
//                       shared prefix), the other is peripheral in that copy
//                       (all nonzero after it);
//   sibling_root_rule — roots of two distinct sub-copies of the same copy
//                       (nonzero digit, then zeros, in both).
bool block_rule(const Label& x, const Label& y, const Params& p);
bool root_peripheral_rule(const Label& x, const Label& y, const Params& p);
bool sibling_root_rule(const Label& x, const Label& y, const Params& p);
bool is_adjacent(const Label& x, const Label& y, const Params& p);

// Neighbors straight from the rules, sorted ascending; no graph is built.
// Costs O(k + degree); mind that the root's degree grows like (n-1)^k.
std::vector<Label> neighbors_of(const Label& x, const Params& p);

// All n^{k-|prefix|} labels extending the given copy prefix (length 1..k-1),
// sorted ascending. The subgraph they induce is the (n, k-|prefix|) member of
// the family with the prefix stripped.
std::vector<Label> subgraph_vertices(std::span<const Digit> prefix, const Params& p);

// Materialized graph: sorted edge vector plus CSR adjacency over dense ids.
class GraphView {
 public:
  // Recursive construction: n relabeled copies of the (n, k-1) graph, the new
  // root-peripheral star, and the clique on the n-1 non-root copy roots.
  static GraphView build(const Params& p, std::uint64_t vertex_cap = kDefaultVertexCap);

  // Adopts an explicit edge set (normalizes orientation, sorts). Throws
  // std::invalid_argument on self-loops, duplicates, or out-of-range ids.
  static GraphView from_edges(const Params& p, std::vector<Edge> edges);

  const Params& params() const { return params_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const;
  std::uint64_t degree(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

 private:
  GraphView(const Params& p, std::vector<Edge> edges);

  Params params_;
  std::uint64_t order_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> offsets_;  // CSR, size order_ + 1
  std::vector<VertexId> adjacency_;
};

// Quotient by the length-`level` prefix partition (1 <= level < k): vertices of
// a class collapse to one, parallel edges merge, loops vanish. The result is
// exactly the (n, level) member, label for label.
GraphView collapse(const GraphView& g, std::int64_t level);

}  // namespace hiernet
