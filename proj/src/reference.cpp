#include "ultraseq/reference.hpp"

#include <stdexcept>

#include "ultraseq/errors.hpp"

namespace ultraseq {

const BigInt& MemoTable::at(Index n) {
  if (n < 1) throw std::invalid_argument("MemoTable: index must be >= 1");
  values_.reserve(static_cast<std::size_t>(n));
  while (size() < n) {
    const Index k = size() + 1;
    auto term = [&](const BigInt& idx) -> const BigInt& {
      if (idx < 1) throw IndexUnderflow(k);
      return values_[static_cast<std::size_t>(to_int64(idx) - 1)];
    };
    const BigInt& prev = values_[static_cast<std::size_t>(k - 2)];
    BigInt next;
    if (rule_ == Rule::hofstadter_q) {
      const BigInt& prev2 = values_[static_cast<std::size_t>(k - 3)];
      next = term(k - prev) + term(k - prev2);
    } else {
      next = term(prev) + term(k - prev);
    }
    values_.push_back(std::move(next));
  }
  return values_[static_cast<std::size_t>(n - 1)];
}

BigInt hofstadter_q(Index n) {
  MemoTable t(MemoTable::Rule::hofstadter_q);
  return t.at(n);
}

BigInt conway(Index n) {
  MemoTable t(MemoTable::Rule::conway);
  return t.at(n);
}

}  // namespace ultraseq
