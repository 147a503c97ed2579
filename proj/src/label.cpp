#include "hiernet/label.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace hiernet {

namespace {

[[noreturn]] void bad_label(const std::string& why) {
  throw std::invalid_argument("invalid label: " + why);
}

}  // namespace

void require_valid(const Label& x, const Params& p) {
  if (std::ssize(x.digits) != p.k())
    bad_label("expected " + std::to_string(p.k()) + " digits, got " +
              std::to_string(x.digits.size()));
  for (Digit d : x.digits)
    if (d < 0 || d >= p.n())
      bad_label("digit " + std::to_string(d) + " out of range for n=" +
                std::to_string(p.n()));
}

Label label_from_index(std::uint64_t id, const Params& p) {
  if (BigInt(id) >= p.order())
    throw std::out_of_range("vertex index " + std::to_string(id) + " >= n^k");
  Label x;
  x.digits.assign(static_cast<std::size_t>(p.k()), 0);
  const auto n = static_cast<std::uint64_t>(p.n());
  for (auto i = static_cast<std::size_t>(p.k()); i-- > 0;) {
    x.digits[i] = static_cast<Digit>(id % n);
    id /= n;
  }
  return x;
}

std::uint64_t index_of(const Label& x, const Params& p) {
  require_valid(x, p);
  if (!p.order_fits_u64())
    throw std::overflow_error("n^k exceeds the dense-index range (uint64)");
  std::uint64_t id = 0;
  for (Digit d : x.digits) id = id * static_cast<std::uint64_t>(p.n()) + static_cast<std::uint64_t>(d);
  return id;
}

std::size_t common_prefix_length(const Label& x, const Label& y) {
  const std::size_t m = std::min(x.digits.size(), y.digits.size());
  std::size_t i = 0;
  while (i < m && x.digits[i] == y.digits[i]) ++i;
  return i;
}

std::string format_label(const Label& x, const Params& p) {
  require_valid(x, p);
  std::string out;
  if (p.n() <= 10) {
    for (Digit d : x.digits) out += static_cast<char>('0' + d);
  } else {
    for (std::size_t i = 0; i < x.digits.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(x.digits[i]);
    }
  }
  return out;
}

Label parse_label(std::string_view text, const Params& p) {
  Label x;
  if (text.empty()) bad_label("empty");
  if (text.find(',') != std::string_view::npos) {
    // Comma-separated form, the only one that can express digits above 9.
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t next = std::min(text.find(',', pos), text.size());
      const std::string_view tok = text.substr(pos, next - pos);
      if (tok.empty()) bad_label("empty digit in '" + std::string(text) + "'");
      Digit value = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') bad_label("bad character '" + std::string(1, c) + "'");
        if (value > (std::numeric_limits<Digit>::max() - 9) / 10)
          bad_label("digit too large");
        value = value * 10 + (c - '0');
      }
      x.digits.push_back(value);
      if (next == text.size()) break;
      pos = next + 1;
    }
  } else {
    if (p.n() > 10)
      bad_label("labels for n > 10 use comma-separated digits");
    for (char c : text) {
      if (c < '0' || c > '9') bad_label("bad character '" + std::string(1, c) + "'");
      x.digits.push_back(c - '0');
    }
  }
  require_valid(x, p);
  return x;
}

VertexClass classify(const Label& x, const Params& p) {
  require_valid(x, p);
  const auto& d = x.digits;
  const std::size_t k = d.size();

  std::size_t last_nonzero = 0;  // 1-based; 0 = none
  std::size_t last_zero = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (d[i] != 0) last_nonzero = i + 1;
    else last_zero = i + 1;
  }

  if (last_nonzero == 0) return {VertexKind::GlobalRoot, 0};
  if (d[k - 1] == 0)
    return {VertexKind::SubRoot, static_cast<std::int64_t>(last_nonzero)};
  if (last_zero == 0) return {VertexKind::GlobalPeripheral, 0};
  return {VertexKind::SubPeripheral, static_cast<std::int64_t>(last_zero)};
}

std::string class_name(const VertexClass& c) {
  switch (c.kind) {
    case VertexKind::GlobalRoot: return "root";
    case VertexKind::SubRoot: return "sub-root(" + std::to_string(c.level) + ")";
    case VertexKind::GlobalPeripheral: return "peripheral";
    case VertexKind::SubPeripheral: return "sub-peripheral(" + std::to_string(c.level) + ")";
  }
  return "?";
}

}  // namespace hiernet
