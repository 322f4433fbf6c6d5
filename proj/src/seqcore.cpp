#include "ultraseq/seqcore.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace ultraseq {

namespace {

std::atomic<std::size_t> g_max_window{1'000'000};

void check_cap(std::size_t n) {
  if (n > g_max_window.load()) {
    throw WindowTooLarge("window of " + std::to_string(n) + " entries exceeds the cap of " +
                         std::to_string(g_max_window.load()));
  }
}

// Sum of a periodic left tail over [a, b] where b < lo. Distances d = lo-1-k
// read unit[P-1 - d mod P].
BigInt left_tail_sum(const ExtRule& rule, Index lo, const BigInt& a, const BigInt& b) {
  const BigInt period = rule.period();
  auto upto = [&](const BigInt& count) {  // sum over distances [0, count)
    const BigInt full = count / period;
    const Index rest = static_cast<Index>(count % period);
    return full * rule.unit_sum() + rule.tail_sum(rest);
  };
  const BigInt d_near = BigInt(lo - 1) - b;
  const BigInt d_far = BigInt(lo - 1) - a;
  return upto(d_far + 1) - upto(d_near);
}

// Sum of a periodic right tail over [a, b] where a > hi. Distances d = k-hi-1
// read unit[d mod P].
BigInt right_tail_sum(const ExtRule& rule, Index hi, const BigInt& a, const BigInt& b) {
  const BigInt period = rule.period();
  auto upto = [&](const BigInt& count) {
    const BigInt full = count / period;
    const Index rest = static_cast<Index>(count % period);
    return full * rule.unit_sum() + rule.head_sum(rest);
  };
  return upto(b - hi) - upto(a - hi - 1);
}

// Range sum over a left tail + materialized prefix sums. Used by generation,
// where the window is still growing on the right.
BigInt sum_growing(const ExtRule& left, Index lo, const std::vector<BigInt>& prefix,
                   const BigInt& a, const BigInt& b) {
  if (a > b) return 0;
  const Index hi = lo + static_cast<Index>(prefix.size()) - 2;
  if (b > hi) throw OutOfDomain(b);
  BigInt total = 0;
  if (a < lo) {
    if (left.is_undefined()) throw OutOfDomain(a);
    const BigInt tail_end = std::min<BigInt>(b, BigInt(lo - 1));
    total += left_tail_sum(left, lo, a, tail_end);
  }
  if (b >= lo) {
    const Index from = a < lo ? lo : static_cast<Index>(a);
    const Index to = static_cast<Index>(b);
    total += prefix[to - lo + 1] - prefix[from - lo];
  }
  return total;
}

}  // namespace

std::size_t max_window_length() { return g_max_window.load(); }
void set_max_window_length(std::size_t n) { g_max_window.store(n); }

ExtRule ExtRule::periodic(std::vector<BigInt> unit) {
  if (unit.empty()) throw std::invalid_argument("periodic unit must be nonempty");
  ExtRule r;
  r.prefix_.reserve(unit.size() + 1);
  for (const auto& v : unit) r.prefix_.push_back(r.prefix_.back() + v);
  r.unit_ = std::move(unit);
  return r;
}

SeqWindow::SeqWindow(Index lo, std::vector<BigInt> values, ExtRule left, ExtRule right)
    : lo_(lo), values_(std::move(values)), left_(std::move(left)), right_(std::move(right)) {
  if (values_.empty()) throw std::invalid_argument("SeqWindow: values must be nonempty");
  check_cap(values_.size());
  prefix_.reserve(values_.size() + 1);
  prefix_.emplace_back(0);
  for (const auto& v : values_) prefix_.push_back(prefix_.back() + v);
}

bool SeqWindow::in_domain(const BigInt& k) const {
  if (k < lo_) return left_.is_periodic();
  if (k > hi()) return right_.is_periodic();
  return true;
}

BigInt SeqWindow::value_at(const BigInt& k) const {
  if (k < lo_) {
    if (left_.is_undefined()) throw OutOfDomain(k);
    const BigInt d = BigInt(lo_ - 1) - k;
    const Index phase = static_cast<Index>(d % left_.period());
    return left_.unit()[left_.period() - 1 - phase];
  }
  if (k > hi()) {
    if (right_.is_undefined()) throw OutOfDomain(k);
    const BigInt d = k - hi() - 1;
    return right_.unit()[static_cast<Index>(d % right_.period())];
  }
  return values_[static_cast<std::size_t>(static_cast<Index>(k) - lo_)];
}

BigInt SeqWindow::value_at(Index k) const {
  if (k >= lo_ && k <= hi()) return values_[static_cast<std::size_t>(k - lo_)];
  return value_at(BigInt(k));
}

std::optional<BigInt> SeqWindow::try_value_at(const BigInt& k) const {
  if (!in_domain(k)) return std::nullopt;
  return value_at(k);
}

BigInt SeqWindow::range_sum(const BigInt& a, const BigInt& b) const {
  if (a > b) return 0;
  if (!in_domain(a)) throw OutOfDomain(a);
  if (!in_domain(b)) throw OutOfDomain(b);
  BigInt total = 0;
  const BigInt lo = lo_;
  const BigInt hi = this->hi();
  if (a < lo) total += left_tail_sum(left_, lo_, a, std::min(b, BigInt(lo - 1)));
  if (b > hi) total += right_tail_sum(right_, this->hi(), std::max(a, BigInt(hi + 1)), b);
  const BigInt from = std::max(a, lo);
  const BigInt to = std::min(b, hi);
  if (from <= to) {
    const auto i = static_cast<std::size_t>(static_cast<Index>(from) - lo_);
    const auto j = static_cast<std::size_t>(static_cast<Index>(to) - lo_);
    total += prefix_[j + 1] - prefix_[i];
  }
  return total;
}

SeqWindow SeqWindow::slice(Index a, Index b) const {
  if (a > b) throw std::invalid_argument("slice: empty range");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(b - a + 1));
  for (Index k = a; k <= b; ++k) out.push_back(value_at(k));
  return SeqWindow(a, std::move(out));
}

bool agree_on(const SeqWindow& a, const SeqWindow& b, Index from, Index to) {
  for (Index k = from; k <= to; ++k) {
    if (a.value_at(k) != b.value_at(k)) return false;
  }
  return true;
}

void CheckReport::add(CheckEntry e) {
  if (!entries.empty() && e.position <= entries.back().position) {
    throw std::invalid_argument("CheckReport positions must be strictly increasing");
  }
  switch (e.status) {
    case CheckStatus::ok: ++ok; break;
    case CheckStatus::violation: ++violations; break;
    case CheckStatus::uncheckable: ++uncheckable; break;
  }
  entries.push_back(std::move(e));
}

NonDeterministic::NonDeterministic(Index position, BigInt head, SumZeroConstraint constraint)
    : SeqError("successor of " + to_string(head) + " at position " + std::to_string(position) +
               " is not determined" +
               (constraint.empty() ? std::string(" (no constraint)")
                                   : " (values at " + to_string(constraint.first) + ".." +
                                         to_string(constraint.last) + " must sum to zero)")),
      position_(position),
      head_(std::move(head)),
      constraint_(std::move(constraint)) {}

SeqWindow extend_right_by_O(const SeqWindow& w, Index steps) {
  if (steps < 1) throw std::invalid_argument("extend_right_by_O: steps must be >= 1");
  if (w.right().is_periodic()) {
    throw IncompatibleShape("extend_right_by_O: right side is already defined");
  }
  check_cap(w.size() + static_cast<std::size_t>(steps));

  std::vector<BigInt> values(w.values().begin(), w.values().end());
  std::vector<BigInt> prefix;
  prefix.reserve(values.size() + steps + 1);
  prefix.emplace_back(0);
  for (const auto& v : values) prefix.push_back(prefix.back() + v);
  values.reserve(values.size() + steps);

  const Index lo = w.lo();
  for (Index s = 0; s < steps; ++s) {
    const Index p = lo + static_cast<Index>(values.size()) - 1;
    const BigInt head = values.back();
    BigInt next;
    if (head > 0) {
      next = head + sum_growing(w.left(), lo, prefix, BigInt(p) - head + 1, BigInt(p));
    } else if (head == 0 || head == -1) {
      next = 0;
    } else {
      // The successor appears on both sides of the rule; only the sum-zero
      // condition on the values after it survives.
      throw NonDeterministic(p, head, {BigInt(p + 2), BigInt(p - 1) - head});
    }
    prefix.push_back(prefix.back() + next);
    values.push_back(std::move(next));
  }
  return SeqWindow(lo, std::move(values), w.left(), ExtRule::undefined());
}

CheckEntry verify_O_point(const SeqWindow& w, Index p) {
  CheckEntry e{p, std::nullopt, w.try_value_at(BigInt(p + 1)), CheckStatus::uncheckable};
  const auto head = w.try_value_at(BigInt(p));
  if (!head) return e;
  try {
    const BigInt& u = *head;
    if (u > 0) {
      e.expected = u + w.range_sum(BigInt(p) - u + 1, BigInt(p));
    } else if (u < 0) {
      e.expected = -u + w.range_sum(BigInt(p), BigInt(p) - u - 1);
    } else {
      e.expected = BigInt(0);
    }
  } catch (const OutOfDomain&) {
    return e;
  }
  if (!e.actual) return e;
  e.status = *e.expected == *e.actual ? CheckStatus::ok : CheckStatus::violation;
  return e;
}

CheckReport verify_O_range(const SeqWindow& w, Index a, Index b) {
  if (a > b) throw std::invalid_argument("verify_O_range: a must be <= b");
  CheckReport report;
  report.entries.reserve(static_cast<std::size_t>(b - a + 1));
  for (Index p = a; p <= b; ++p) report.add(verify_O_point(w, p));
  return report;
}

SeqWindow map_local(const SeqWindow& w, Index reach_lo, Index reach_hi,
                    const std::function<BigInt(std::span<const BigInt>)>& f) {
  if (reach_lo > reach_hi) throw std::invalid_argument("map_local: empty reach");
  std::vector<BigInt> args(static_cast<std::size_t>(reach_hi - reach_lo + 1));
  auto eval = [&](Index q) {
    for (Index j = reach_lo; j <= reach_hi; ++j) {
      args[static_cast<std::size_t>(j - reach_lo)] = w.value_at(q + j);
    }
    return f(args);
  };

  // Beyond lo2 - 1 on the left (and hi2 + 1 on the right) every argument
  // lies in the periodic tail, so the output is periodic there too.
  Index lo2 = w.lo() - reach_lo;
  Index hi2 = w.hi() - reach_hi;
  ExtRule left;
  ExtRule right;
  if (w.left().is_periodic()) {
    lo2 = w.lo() - reach_hi;
    const Index period = w.left().period();
    std::vector<BigInt> unit;
    for (Index j = 0; j < period; ++j) unit.push_back(eval(lo2 - period + j));
    left = ExtRule::periodic(std::move(unit));
  }
  if (w.right().is_periodic()) {
    hi2 = w.hi() - reach_lo;
    const Index period = w.right().period();
    std::vector<BigInt> unit;
    for (Index j = 0; j < period; ++j) unit.push_back(eval(hi2 + 1 + j));
    right = ExtRule::periodic(std::move(unit));
  }
  if (lo2 > hi2) throw WindowTooSmall("window too short for the requested local map");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(hi2 - lo2 + 1));
  for (Index q = lo2; q <= hi2; ++q) out.push_back(eval(q));
  return SeqWindow(lo2, std::move(out), std::move(left), std::move(right));
}

SeqWindow difference(const SeqWindow& w, Index k) {
  if (k < 0) throw std::invalid_argument("difference: order must be >= 0");
  SeqWindow out = w;
  for (Index i = 0; i < k; ++i) {
    out = map_local(out, 0, 1, [](std::span<const BigInt> a) { return BigInt(a[1] - a[0]); });
  }
  return out;
}

PartialSums partial_sums(const SeqWindow& w, Index n) {
  if (n < 0) throw std::invalid_argument("partial_sums: n must be >= 0");
  return {w.range_sum(BigInt(0), BigInt(n - 1)), w.range_sum(BigInt(-n), BigInt(-1))};
}

FreeCheck is_free(std::span<const BigInt> s, Index alpha) {
  if (s.empty()) throw std::invalid_argument("is_free: empty sequence");
  const Index beta = alpha + static_cast<Index>(s.size()) - 1;
  auto at = [&](Index n) -> const BigInt& { return s[static_cast<std::size_t>(n - alpha)]; };

  for (Index n = alpha; n < beta; ++n) {
    const BigInt reach = BigInt(n) + sign(at(n)) - at(n);
    if (reach < alpha || reach > beta) return {false, n, 1};
  }
  const SeqWindow w(alpha, std::vector<BigInt>(s.begin(), s.end()));
  for (Index n = alpha; n < beta; ++n) {
    if (verify_O_point(w, n).status != CheckStatus::ok) return {false, n, 2};
  }
  if (at(beta) != -2) return {false, beta, 3};
  return {};
}

std::vector<BigInt> unitary(const SeqWindow& w, Index period) {
  if (period < 1) throw std::invalid_argument("unitary: period must be >= 1");
  const Index from = w.left().is_periodic() ? w.lo() - w.left().period() - period : w.lo();
  const Index to = w.right().is_periodic() ? w.hi() + w.right().period() + period : w.hi();
  for (Index k = from; k + period <= to; ++k) {
    const auto a = w.try_value_at(BigInt(k));
    const auto b = w.try_value_at(BigInt(k + period));
    if (a && b && *a != *b) throw NotPeriodic(period);
  }
  std::vector<BigInt> unit;
  unit.reserve(static_cast<std::size_t>(period));
  for (Index m = 1; m <= period; ++m) unit.push_back(w.value_at(m));
  return unit;
}

SeqWindow breve(std::span<const BigInt> unit, Index beta) {
  if (unit.empty()) throw std::invalid_argument("breve: empty unit");
  std::vector<BigInt> values(unit.begin(), unit.end());
  const Index lo = beta - static_cast<Index>(values.size()) + 1;
  return SeqWindow(lo, values, ExtRule::periodic(values));
}

SeqWindow concat(const SeqWindow& a, std::span<const BigInt> b) {
  if (a.right().is_periodic()) throw IncompatibleShape("concat: left part is right-infinite");
  if (b.empty()) return a;
  std::vector<BigInt> values(a.values().begin(), a.values().end());
  values.insert(values.end(), b.begin(), b.end());
  return SeqWindow(a.lo(), std::move(values), a.left());
}

SeqWindow concat(const SeqWindow& a, const SeqWindow& b) {
  if (a.right().is_periodic()) throw IncompatibleShape("concat: left part is right-infinite");
  if (b.left().is_periodic()) throw IncompatibleShape("concat: right part is left-infinite");
  std::vector<BigInt> values(a.values().begin(), a.values().end());
  values.insert(values.end(), b.values().begin(), b.values().end());
  return SeqWindow(a.lo(), std::move(values), a.left(), b.right());
}

}  // namespace ultraseq
