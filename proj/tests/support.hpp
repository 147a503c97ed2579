#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "hiernet/graph.hpp"

namespace testsupport {

inline hiernet::Label L(std::initializer_list<hiernet::Digit> digits) {
  return {std::vector<hiernet::Digit>(digits)};
}

// The small-instance grid most exhaustive checks run on: every (n, k) with a
// couple hundred vertices at most, covering n = 2 degeneration and k = 1.
inline std::vector<std::pair<int, int>> small_grid() {
  return {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2},
          {3, 3}, {3, 4}, {4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {6, 2}};
}

}  // namespace testsupport
