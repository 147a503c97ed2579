#include "hiernet/params.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace hiernet {

Params Params::validate(std::int64_t n, std::int64_t k) {
  if (n < 2) throw std::invalid_argument("n must be >= 2 (got " + std::to_string(n) + ")");
  if (k < 1) throw std::invalid_argument("k must be >= 1 (got " + std::to_string(k) + ")");
  return Params(n, k);
}

Params::Params(std::int64_t n, std::int64_t k)
    : n_(n), k_(k), order_(ipow(BigInt(n), k)) {}

bool Params::order_fits_u64() const {
  return order_ <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

std::uint64_t Params::order_u64() const {
  if (!order_fits_u64())
    throw std::overflow_error("n^k exceeds the dense-index range (uint64)");
  return order_.convert_to<std::uint64_t>();
}

}  // namespace hiernet
