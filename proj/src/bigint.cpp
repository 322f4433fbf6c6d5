#include "ultraseq/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace ultraseq {

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + to_string(v));
  }
  return static_cast<std::int64_t>(v);
}

std::string to_string(const BigInt& v) { return v.str(); }

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  BigInt out = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    out = out * 10 + (c - '0');
  }
  return negative ? BigInt(-out) : out;
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace ultraseq
