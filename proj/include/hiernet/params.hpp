#pragma once

#include <compare>
#include <cstdint>

#include "hiernet/numeric.hpp"

namespace hiernet {

// Validated (n, k) pair: n-clique seed, k nesting levels, n^k vertices.
// Construction goes through validate() so invalid parameters cannot circulate.
class Params {
 public:
  static Params validate(std::int64_t n, std::int64_t k);

  std::int64_t n() const { return n_; }
  std::int64_t k() const { return k_; }
  const BigInt& order() const { return order_; }  // n^k

  bool order_fits_u64() const;
  std::uint64_t order_u64() const;  // throws std::overflow_error if it does not fit

  friend bool operator==(const Params& a, const Params& b) {
    return a.n_ == b.n_ && a.k_ == b.k_;
  }

 private:
  Params(std::int64_t n, std::int64_t k);

  std::int64_t n_;
  std::int64_t k_;
  BigInt order_;
};

}  // namespace hiernet
