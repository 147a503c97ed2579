#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hiernet/params.hpp"

namespace hiernet {

using Digit = std::int64_t;

// A vertex name: k digits in base n, most significant first. The leading digit
// selects the outermost copy, the trailing digit the position inside the
// innermost clique.
struct Label {
  std::vector<Digit> digits;

  auto operator<=>(const Label&) const = default;
};

// Throws std::invalid_argument unless the label has exactly k digits in [0, n).
void require_valid(const Label& x, const Params& p);

// Dense-index codec: the index is the label read as a base-n integer. Only
// materialization-scale code paths use indices, hence the uint64 domain.
Label label_from_index(std::uint64_t id, const Params& p);
std::uint64_t index_of(const Label& x, const Params& p);

std::size_t common_prefix_length(const Label& x, const Label& y);

// Text form: digits concatenated for n <= 10 ("120"), comma-separated
// otherwise ("1,2,0").
std::string format_label(const Label& x, const Params& p);
Label parse_label(std::string_view text, const Params& p);

// The four structural roles a vertex can play. `level` is meaningful for the
// Sub kinds only: a sub-root of level i is the root of one of the n^{i-1}(n-1)
// level-i copies that is not the global root; a sub-peripheral of level i is
// peripheral within its level-i copy but in no larger one.
enum class VertexKind { GlobalRoot, SubRoot, GlobalPeripheral, SubPeripheral };

struct VertexClass {
  VertexKind kind;
  std::int64_t level;  // 0 for the two Global kinds, else 1..k-1

  auto operator<=>(const VertexClass&) const = default;
};

VertexClass classify(const Label& x, const Params& p);

// "root", "sub-root(2)", "peripheral", "sub-peripheral(1)".
std::string class_name(const VertexClass& c);

}  // namespace hiernet
