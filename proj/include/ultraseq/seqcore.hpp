#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ultraseq/bigint.hpp"
#include "ultraseq/errors.hpp"

namespace ultraseq {

/// Upper bound on materialized window length. Defaults to 10^6 entries.
std::size_t max_window_length();
void set_max_window_length(std::size_t n);

/// How a window continues beyond its materialized values on one side.
/// A constant tail is a periodic tail with a one-element unit.
class ExtRule {
 public:
  ExtRule() = default;

  static ExtRule undefined() { return {}; }
  static ExtRule periodic(std::vector<BigInt> unit);
  static ExtRule constant(BigInt value) { return periodic({std::move(value)}); }

  bool is_undefined() const { return unit_.empty(); }
  bool is_periodic() const { return !unit_.empty(); }

  const std::vector<BigInt>& unit() const { return unit_; }
  Index period() const { return static_cast<Index>(unit_.size()); }
  const BigInt& unit_sum() const { return prefix_.back(); }

  /// Sum of unit[0..count) for 0 <= count <= period.
  const BigInt& head_sum(Index count) const { return prefix_[count]; }
  /// Sum of the last `count` unit entries.
  BigInt tail_sum(Index count) const { return unit_sum() - prefix_[period() - count]; }

  friend bool operator==(const ExtRule& a, const ExtRule& b) { return a.unit_ == b.unit_; }

 private:
  std::vector<BigInt> unit_;
  std::vector<BigInt> prefix_{BigInt(0)};
};

/// A bi-infinite integer sequence: a materialized run values[0..n) placed at
/// positions lo..lo+n-1, continued by `left` below lo and `right` above hi.
///
/// Phase convention: a periodic left tail puts unit.back() at lo-1,
/// unit[size-2] at lo-2 and so on; a periodic right tail puts unit[0] at
/// hi+1, unit[1] at hi+2 and so on.
class SeqWindow {
 public:
  SeqWindow(Index lo, std::vector<BigInt> values, ExtRule left = {}, ExtRule right = {});

  Index lo() const { return lo_; }
  Index hi() const { return lo_ + static_cast<Index>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }
  std::span<const BigInt> values() const { return values_; }
  const ExtRule& left() const { return left_; }
  const ExtRule& right() const { return right_; }

  bool in_domain(const BigInt& k) const;
  /// Throws OutOfDomain outside the domain.
  BigInt value_at(const BigInt& k) const;
  BigInt value_at(Index k) const;
  std::optional<BigInt> try_value_at(const BigInt& k) const;

  /// Sum of value_at(k) for k in [a, b]; zero when a > b. Periodic tails are
  /// summed arithmetically, so the range may be astronomically long.
  /// Throws OutOfDomain if any index of a non-empty range is undefined.
  BigInt range_sum(const BigInt& a, const BigInt& b) const;

  /// Materialized copy of [a, b] with undefined sides.
  SeqWindow slice(Index a, Index b) const;

  /// Structural equality (same lo, values and rules).
  friend bool operator==(const SeqWindow& x, const SeqWindow& y) {
    return x.lo_ == y.lo_ && x.values_ == y.values_ && x.left_ == y.left_ &&
           x.right_ == y.right_;
  }

 private:
  Index lo_;
  std::vector<BigInt> values_;
  std::vector<BigInt> prefix_;  // prefix_[i] = values_[0] + ... + values_[i-1]
  ExtRule left_;
  ExtRule right_;
};

/// True when a and b agree at every index of [from, to] (both must be defined).
bool agree_on(const SeqWindow& a, const SeqWindow& b, Index from, Index to);

enum class CheckStatus { ok, violation, uncheckable };

struct CheckEntry {
  Index position;
  std::optional<BigInt> expected;  // what the rule produces at position+1
  std::optional<BigInt> actual;    // value_at(position+1)
  CheckStatus status;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  std::size_t ok = 0;
  std::size_t violations = 0;
  std::size_t uncheckable = 0;

  void add(CheckEntry e);
  bool clean() const { return violations == 0; }
};

/// Appends `steps` values generated by u_{p+1} = |u_p| + sum_{i<|u_p|} u_{p - i sign u_p}.
/// Heads 0 and -1 produce 0. A head of -2 or <= -3 throws NonDeterministic
/// carrying the sum-zero constraint on its successors. Requires an undefined
/// right side.
SeqWindow extend_right_by_O(const SeqWindow& w, Index steps);

/// Checks the self-generation rule at p: value_at(p+1) against
/// sum_{i<|u_p|} (value_at(p - i sign u_p) + 1).
CheckEntry verify_O_point(const SeqWindow& w, Index p);
CheckReport verify_O_range(const SeqWindow& w, Index a, Index b);

/// Output position q takes f(values at q+reach_lo .. q+reach_hi). Periodic
/// tails map to periodic tails of the same period. Throws WindowTooSmall when
/// the output would be empty.
SeqWindow map_local(const SeqWindow& w, Index reach_lo, Index reach_hi,
                    const std::function<BigInt(std::span<const BigInt>)>& f);

/// k-fold forward difference.
SeqWindow difference(const SeqWindow& w, Index k);

struct PartialSums {
  BigInt successors;    // value_at(0) + ... + value_at(n-1)
  BigInt predecessors;  // value_at(-n) + ... + value_at(-1)
};
PartialSums partial_sums(const SeqWindow& w, Index n);

struct FreeCheck {
  bool ok = true;
  Index position = 0;  // offending index, meaningful when !ok
  int condition = 0;   // 1: reach, 2: generation, 3: last element

  explicit operator bool() const { return ok; }
};

/// Tests the three free-sequence conditions on s placed at alpha..alpha+n-1:
/// every term reaches only indices inside the list, every term but the last
/// generates its successor, and the last element is -2. The first failing
/// condition is reported (conditions are checked in order 1, 2, 3).
FreeCheck is_free(std::span<const BigInt> s, Index alpha);

/// Values at positions 1..period. Throws NotPeriodic if any defined pair
/// a_k, a_{k+period} differs.
std::vector<BigInt> unitary(const SeqWindow& w, Index period);

/// Left-infinite periodic window ending at beta with value unit.back().
SeqWindow breve(std::span<const BigInt> unit, Index beta);

SeqWindow concat(const SeqWindow& a, std::span<const BigInt> b);
SeqWindow concat(const SeqWindow& a, const SeqWindow& b);

}  // namespace ultraseq
