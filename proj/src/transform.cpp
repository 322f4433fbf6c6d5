#include "ultraseq/transform.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <stdexcept>

namespace ultraseq {

namespace {

struct Evaluation {
  std::optional<BigInt> value;  // nu_{p+1}
  BigInt min_ref;               // smallest index read, p included
  BigInt max_ref;
};

// nu_{p+1} for a single p, or an empty value if any referenced index is
// outside the domain.
Evaluation evaluate_H(const HParams& h, const SeqWindow& w, Index p) {
  const BigInt pos = p;
  Evaluation e{std::nullopt, pos, pos};
  const auto u = w.try_value_at(pos);
  if (!u) return e;

  const BigInt f1 = h.f1(pos, *u);
  const BigInt f2 = h.f2(pos, *u);
  if (f2 < f1) throw std::invalid_argument("apply_H: F2 < F1 at position " + std::to_string(p));
  const BigInt count = f2 - f1;
  const BigInt f3 = h.f3(pos, *u);
  const BigInt base = pos * h.f4(pos, *u);
  const BigInt step = h.f5(pos, *u) * sign(*u);
  const BigInt f6 = h.f6(pos, *u);

  if (count == 0) {
    e.value = BigInt(0);
    return e;
  }
  const BigInt first = base - f1 * step;
  const BigInt last = base - (f2 - 1) * step;
  e.min_ref = std::min({pos, first, last});
  e.max_ref = std::max({pos, first, last});

  BigInt sum;
  if (step == 0) {
    const auto v = w.try_value_at(base);
    if (!v) return e;
    sum = count * *v;
  } else if (step == 1 || step == -1) {
    const BigInt lo = std::min(first, last);
    const BigInt hi = std::max(first, last);
    if (!w.in_domain(lo) || !w.in_domain(hi)) return e;
    sum = w.range_sum(lo, hi);
  } else {
    if (count > max_window_length()) {
      throw TooLarge("apply_H: strided sum with " + to_string(count) + " terms");
    }
    for (BigInt i = f1; i < f2; ++i) {
      const auto v = w.try_value_at(base - i * step);
      if (!v) return e;
      sum += *v;
    }
  }
  e.value = f3 * sum + count * f6;
  return e;
}

struct TailBlock {
  Index boundary;            // last (left) or first (right) output position of the tail
  std::vector<BigInt> unit;  // output tail unit in window phase convention
};

constexpr int kTailSearchRounds = 32;

// Finds a block of one period plus one element, deep enough in the left tail
// that every reference stays in the tail, whose outputs repeat.
std::optional<TailBlock> left_output_tail(const HParams& h, const SeqWindow& w) {
  const Index period = w.left().period();
  Index b = w.lo() - 1;
  for (int round = 0; round < kTailSearchRounds; ++round) {
    std::vector<BigInt> outputs;
    BigInt max_ref = b - period;
    bool computable = true;
    for (Index p = b - period; p <= b; ++p) {
      auto e = evaluate_H(h, w, p);
      if (!e.value) {
        computable = false;
        break;
      }
      max_ref = std::max(max_ref, e.max_ref);
      outputs.push_back(std::move(*e.value));
    }
    if (!computable) return std::nullopt;
    if (max_ref >= w.lo()) {
      const BigInt shift = max_ref - w.lo() + 1;
      if (shift > max_window_length()) return std::nullopt;
      b -= static_cast<Index>(shift);
      continue;
    }
    if (outputs.front() != outputs.back()) return std::nullopt;
    outputs.erase(outputs.begin());
    return TailBlock{b + 1, std::move(outputs)};
  }
  return std::nullopt;
}

std::optional<TailBlock> right_output_tail(const HParams& h, const SeqWindow& w) {
  const Index period = w.right().period();
  Index a = w.hi() + 1;
  for (int round = 0; round < kTailSearchRounds; ++round) {
    std::vector<BigInt> outputs;
    BigInt min_ref = a;
    bool computable = true;
    for (Index p = a; p <= a + period; ++p) {
      auto e = evaluate_H(h, w, p);
      if (!e.value) {
        computable = false;
        break;
      }
      min_ref = std::min(min_ref, e.min_ref);
      outputs.push_back(std::move(*e.value));
    }
    if (!computable) return std::nullopt;
    if (min_ref <= w.hi()) {
      const BigInt shift = w.hi() - min_ref + 1;
      if (shift > max_window_length()) return std::nullopt;
      a += static_cast<Index>(shift);
      continue;
    }
    if (outputs.front() != outputs.back()) return std::nullopt;
    outputs.pop_back();
    return TailBlock{a + 1, std::move(outputs)};
  }
  return std::nullopt;
}

BigInt binomial(Index n, Index k) {
  BigInt c = 1;
  for (Index i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BigInt power(const BigInt& base, Index e) {
  BigInt out = 1;
  for (Index i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

HParams HParams::constant(BigInt f1, BigInt f2, BigInt f3, BigInt f4, BigInt f5, BigInt f6) {
  auto k = [](BigInt v) -> Slot { return [v](const BigInt&, const BigInt&) { return v; }; };
  return {k(std::move(f1)), k(std::move(f2)), k(std::move(f3)),
          k(std::move(f4)), k(std::move(f5)), k(std::move(f6))};
}

HParams HParams::O() {
  const Slot zero = [](const BigInt&, const BigInt&) { return BigInt(0); };
  const Slot one = [](const BigInt&, const BigInt&) { return BigInt(1); };
  return {zero,
          [](const BigInt&, const BigInt& u) { return abs(u); },
          one,
          one,
          one,
          one};
}

SeqWindow apply_H(const HParams& h, const SeqWindow& w) {
  std::optional<TailBlock> left;
  std::optional<TailBlock> right;
  if (w.left().is_periodic()) left = left_output_tail(h, w);
  if (w.right().is_periodic()) right = right_output_tail(h, w);

  // Output positions q = p + 1.
  Index q_first = w.lo() + 1;
  if (left) {
    q_first = left->boundary + 1;
  } else if (w.left().is_periodic()) {
    q_first = w.lo() - w.left().period() + 1;
  }
  Index q_last = w.hi() + 1;
  if (right) {
    q_last = right->boundary - 1;
  } else if (w.right().is_periodic()) {
    q_last = w.hi() + w.right().period() + 1;
  }

  // Longest contiguous run of computable outputs (first one on ties).
  std::vector<std::optional<BigInt>> outputs;
  outputs.reserve(static_cast<std::size_t>(q_last - q_first + 1));
  for (Index q = q_first; q <= q_last; ++q) outputs.push_back(evaluate_H(h, w, q - 1).value);
  std::size_t best_start = 0, best_len = 0;
  for (std::size_t i = 0; i < outputs.size();) {
    if (!outputs[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < outputs.size() && outputs[j]) ++j;
    if (j - i > best_len) {
      best_start = i;
      best_len = j - i;
    }
    i = j;
  }
  if (best_len == 0) throw DomainExhausted("apply_H: no computable position");

  std::vector<BigInt> values;
  values.reserve(best_len);
  for (std::size_t i = best_start; i < best_start + best_len; ++i) values.push_back(*outputs[i]);
  ExtRule left_rule;
  ExtRule right_rule;
  if (left && best_start == 0) left_rule = ExtRule::periodic(std::move(left->unit));
  if (right && best_start + best_len == outputs.size()) {
    right_rule = ExtRule::periodic(std::move(right->unit));
  }
  return SeqWindow(q_first + static_cast<Index>(best_start), std::move(values),
                   std::move(left_rule), std::move(right_rule));
}

SeqWindow apply_O(const SeqWindow& w) { return apply_H(HParams::O(), w); }

SeqWindow apply_G(const GParams& g, const SeqWindow& w) {
  return map_local(w, -2, -1, [&g](std::span<const BigInt> a) {
    return BigInt(g.P * a[1] - g.Q * a[0]);
  });
}

SeqWindow recurrence_1_3_extend(const GParams& g, Index r, std::span<const BigInt> initial,
                                Index n) {
  if (r < 1) throw std::invalid_argument("recurrence_1_3_extend: r must be >= 1");
  if (static_cast<Index>(initial.size()) != 2 * r) {
    throw std::invalid_argument("recurrence_1_3_extend: expected " + std::to_string(2 * r) +
                                " initial values, got " + std::to_string(initial.size()));
  }
  if (n < 0) throw std::invalid_argument("recurrence_1_3_extend: n must be >= 0");

  // coeff[i] multiplies Lambda_{q-r-i}
  std::vector<BigInt> coeff;
  for (Index i = 0; i <= r; ++i) {
    BigInt c = binomial(r, i) * power(g.P, r - i) * power(g.Q, i);
    coeff.push_back(i % 2 == 0 ? c : BigInt(-c));
  }
  std::vector<BigInt> values(initial.begin(), initial.end());
  values.reserve(values.size() + static_cast<std::size_t>(n));
  for (Index s = 0; s < n; ++s) {
    const auto q = static_cast<Index>(values.size());
    BigInt next = 0;
    for (Index i = 0; i <= r; ++i) next += coeff[i] * values[q - r - i];
    values.push_back(std::move(next));
  }
  return SeqWindow(0, std::move(values));
}

SeqWindow shift_L(const SeqWindow& w) {
  return SeqWindow(w.lo() + 1, std::vector<BigInt>(w.values().begin(), w.values().end()),
                   w.left(), w.right());
}

Transformation Transformation::G(GParams params) {
  return {Kind::G, params, {}, "G:" + to_string(params.P) + "," + to_string(params.Q)};
}

Transformation Transformation::H(HParams params, std::string name) {
  return {Kind::H, {}, std::move(params), std::move(name)};
}

Transformation Transformation::by_name(std::string_view name) {
  if (name == "O") return o();
  if (name == "L") return l();
  if (name == "fib-like") return H(HParams::constant(0, 2, 1, 1, 1, 0), "fib-like");
  if (name.starts_with("G:")) {
    const auto args = name.substr(2);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("G expects 'G:P,Q', got '" + std::string(name) + "'");
    }
    return G({parse_bigint(args.substr(0, comma)), parse_bigint(args.substr(comma + 1))});
  }
  throw std::invalid_argument("unknown transformation '" + std::string(name) +
                              "' (known: O, L, fib-like, G:P,Q)");
}

SeqWindow Transformation::operator()(const SeqWindow& w) const {
  switch (kind) {
    case Kind::O: return apply_O(w);
    case Kind::L: return shift_L(w);
    case Kind::G: return apply_G(g, w);
    case Kind::H: return apply_H(h, w);
  }
  throw std::logic_error("unreachable");
}

SeqWindow iterate(const Transformation& t, Index n, const SeqWindow& w) {
  if (n < 1) throw std::invalid_argument("iterate: n must be >= 1");
  SeqWindow out = w;
  for (Index i = 0; i < n; ++i) {
    try {
      out = t(out);
    } catch (const WindowTooSmall& e) {
      throw DomainExhausted("iterate: window exhausted after " + std::to_string(i) +
                            " applications of " + t.name);
    } catch (const DomainExhausted&) {
      throw DomainExhausted("iterate: window exhausted after " + std::to_string(i) +
                            " applications of " + t.name);
    }
  }
  return out;
}

}  // namespace ultraseq
