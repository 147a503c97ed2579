#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "hiernet/label.hpp"

namespace hiernet {

// Label-only distance computations, O(k) time, independent of n beyond digit
// validity. `suffix` is the tail of a label, read as a vertex of the copy the
// tail spans.

// Hops from the suffix-vertex to that copy's root (the all-zero suffix).
std::int64_t distance_to_root(std::span<const Digit> suffix);

// Hops from the suffix-vertex to the copy's peripheral set (all-nonzero suffixes).
std::int64_t distance_to_periphery(std::span<const Digit> suffix);

// Exact shortest-path distance between two vertices, from the labels alone.
std::int64_t oracle_distance(const Label& x, const Label& y, const Params& p);

// The alternating pair (0101..., 1010...) realizing the diameter 2k - 1.
std::pair<Label, Label> diametral_pair(const Params& p);

}  // namespace hiernet
