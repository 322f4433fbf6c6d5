#pragma once

#include <vector>

#include "ultraseq/bigint.hpp"

namespace ultraseq {

/// Bottom-up memo for the classical self-referential recursions, seeded with
/// a_1 = a_2 = 1. Entries are never rewritten once computed.
class MemoTable {
 public:
  enum class Rule {
    hofstadter_q,  // Q_n = Q_{n-Q_{n-1}} + Q_{n-Q_{n-2}}
    conway,        // C_n = C_{C_{n-1}} + C_{n-C_{n-1}}
  };

  explicit MemoTable(Rule rule) : rule_(rule), values_{1, 1} {}

  /// Term n (1-based), extending the table as needed. Throws
  /// std::invalid_argument for n < 1 and IndexUnderflow if a referenced index
  /// drops below 1.
  const BigInt& at(Index n);
  Index size() const { return static_cast<Index>(values_.size()); }
  Rule rule() const { return rule_; }

 private:
  Rule rule_;
  std::vector<BigInt> values_;  // values_[i] = a_{i+1}
};

BigInt hofstadter_q(Index n);
BigInt conway(Index n);

}  // namespace ultraseq
