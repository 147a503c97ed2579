#include "hiernet/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hiernet {

namespace {

struct RootPeriphery {
  std::int64_t to_root;
  std::int64_t to_periphery;
};

// Both distances in one backward pass. For a single digit: a zero sits on the
// root (0 away) and one hop from the periphery; a nonzero digit the reverse.
// Prepending a digit either keeps the vertex in the new copy's root block
// (digit 0: reach the new root via the old one, the new periphery one hop past
// it) or in a peripheral sub-copy (reach the new periphery via the old one,
// the new root one hop past it).
RootPeriphery root_periphery(std::span<const Digit> suffix) {
  if (suffix.empty()) throw std::invalid_argument("empty digit suffix");
  RootPeriphery d = suffix.back() == 0 ? RootPeriphery{0, 1} : RootPeriphery{1, 0};
  for (std::size_t i = suffix.size() - 1; i-- > 0;) {
    if (suffix[i] == 0) d = {d.to_root, d.to_root + 1};
    else d = {d.to_periphery + 1, d.to_periphery};
  }
  return d;
}

}  // namespace

std::int64_t distance_to_root(std::span<const Digit> suffix) {
  return root_periphery(suffix).to_root;
}

std::int64_t distance_to_periphery(std::span<const Digit> suffix) {
  return root_periphery(suffix).to_periphery;
}

std::int64_t oracle_distance(const Label& x, const Label& y, const Params& p) {
  require_valid(x, p);
  require_valid(y, p);
  if (x == y) return 0;

  const std::size_t lcp = common_prefix_length(x, y);
  const std::size_t k = x.digits.size();
  if (lcp == k - 1) return 1;  // same innermost clique

  // Inside the smallest copy containing both, x and y sit in different
  // sub-copies. Any path between them leaves via that copy's hubs: the shared
  // root (if one endpoint's sub-copy is the root block) or the peripheral ring.
  const std::span<const Digit> xs(x.digits.data() + lcp, k - lcp);
  const std::span<const Digit> ys(y.digits.data() + lcp, k - lcp);
  const auto dx = root_periphery(xs.subspan(1));
  const auto dy = root_periphery(ys.subspan(1));

  if (xs[0] == 0) return dx.to_root + 1 + dy.to_periphery;
  if (ys[0] == 0) return dy.to_root + 1 + dx.to_periphery;
  // Both in non-root sub-copies: cross either through the two sub-roots (one
  // hop between them) or through the shared root via both peripheries.
  return std::min(dx.to_root + 1 + dy.to_root,
                  dx.to_periphery + 2 + dy.to_periphery);
}

std::pair<Label, Label> diametral_pair(const Params& p) {
  Label a, b;
  a.digits.reserve(static_cast<std::size_t>(p.k()));
  b.digits.reserve(static_cast<std::size_t>(p.k()));
  for (std::int64_t i = 0; i < p.k(); ++i) {
    a.digits.push_back(i % 2);        // 0101...
    b.digits.push_back((i + 1) % 2);  // 1010...
  }
  return {std::move(a), std::move(b)};
}

}  // namespace hiernet
