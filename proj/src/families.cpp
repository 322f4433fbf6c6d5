#include "ultraseq/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "ultraseq/exactmath.hpp"

namespace ultraseq {

namespace {

[[noreturn]] void identity_failure(const std::string& what, const BigInt& lhs, const BigInt& rhs) {
  throw IdentityViolation(what + ": " + to_string(lhs) + " != " + to_string(rhs));
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace

// --- Pi ---------------------------------------------------------------------

SeqWindow pi_window(Index m, Index n_max) {
  if (m < 1) throw std::invalid_argument("pi_window: m must be >= 1");
  if (n_max < 0) throw std::invalid_argument("pi_window: n_max must be >= 0");
  SeqWindow w(0, {BigInt(m)}, ExtRule::constant(-2));
  if (n_max > 0) w = extend_right_by_O(w, n_max);

  const auto v = w.values();
  BigInt partial = 0;  // S_n
  for (Index n = 0; n + 1 <= n_max; ++n) {
    const BigInt by_sum = partial + 2 * n + 2;
    if (v[n + 1] != by_sum) {
      identity_failure("pi_window partial-sum form at " + std::to_string(n + 1), v[n + 1], by_sum);
    }
    if (n + 1 >= 2) {
      const BigInt by_rec = v[n] + v[n - 1] + 2;
      if (v[n + 1] != by_rec) {
        identity_failure("pi_window recurrence at " + std::to_string(n + 1), v[n + 1], by_rec);
      }
    }
    partial += v[n];
  }
  return w;
}

BigInt pi_closed(Index m, Index n, ClosedFormMethod method) {
  if (n < 0) throw std::invalid_argument("pi_closed: n must be >= 0");
  if (method == ClosedFormMethod::fib) return m * fib(n - 1) + 2 * fib(n + 2) - 2;

  const QuadExt phi = QuadExt::phi();
  const QuadExt root5 = QuadExt::sqrt5();
  const QuadExt b = (QuadExt(m + 2) * phi + QuadExt(2 - m)) / root5;
  const QuadExt c = (QuadExt(m + 2) * phi - QuadExt(4)) / root5;
  const QuadExt value = b * quad_pow(phi, n) + c * quad_pow(QuadExt::psi(), n) - QuadExt(2);
  if (!value.is_rational()) {
    throw IdentityViolation("pi_closed(quad): irrational part does not vanish at n = " +
                            std::to_string(n));
  }
  return value.to_integer();
}

BigInt pi_row_relation(Index m, Index t, Index n) {
  const BigInt out = pi_closed(t, n) + (m - t) * fib(n - 1);
  const BigInt direct = pi_closed(m, n);
  if (out != direct) identity_failure("row relation", out, direct);
  return out;
}

BigInt pi_two_point(Index m, Index t, Index e, Index n) {
  if (e < 0 || n < e) throw std::invalid_argument("pi_two_point: requires 0 <= e <= n");
  const BigInt out = pi_closed(t, e) * fib(n - e - 1) + pi_closed(t, e + 1) * fib(n - e) +
                     2 * fib(n - e + 1) + (m - t) * fib(n - 1) - 2;
  const BigInt direct = pi_closed(m, n);
  if (out != direct) identity_failure("two-point form", out, direct);
  return out;
}

bool DeltaReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
}

void DeltaReport::require() const {
  for (const auto& c : checks) {
    if (!c.holds()) {
      throw IdentityViolation(c.name + " fails at m=" + std::to_string(m) + ", k=" +
                              std::to_string(k) + ", n=" + std::to_string(n) + ": " +
                              to_string(c.lhs) + " != " + to_string(c.rhs));
    }
  }
}

DeltaReport delta_identities(Index m, Index k, Index n) {
  if (k < 1) throw std::invalid_argument("delta_identities: k must be >= 1");
  DeltaReport report{m, k, n, {}};
  if (n < 0) return report;

  const SeqWindow pi = pi_window(m, n + k);
  const SeqWindow d = difference(pi, k);
  const BigInt lhs = d.value_at(n);

  if (n > 0) {
    report.checks.push_back({"fibonacci-form", lhs, m * fib(n - 1 - k) + 2 * fib(n + 2 - k)});
  }
  if (n >= 2) {
    report.checks.push_back({"three-term", lhs, d.value_at(n - 1) + d.value_at(n - 2)});
  }
  if (k <= n - 1) {
    report.checks.push_back({"shifted-row", lhs, pi.value_at(n - k) + 2});
  }
  if (m == 1) report.checks.push_back({"row-lucas (m=1)", lhs, lucas(n + 2 - k)});
  if (m == 2) report.checks.push_back({"row-fibonacci (m=2)", lhs, 4 * fib(n - k)});
  if (m == 6) report.checks.push_back({"row-lucas (m=6)", lhs, 4 * lucas(n - k)});
  return report;
}

BigInt growth_residual(const SeqWindow& w, Index n) {
  const BigInt a_n = w.value_at(n);
  const BigInt a_n1 = w.value_at(n + 1);
  if (!(0 < a_n && a_n < a_n1)) {
    throw std::invalid_argument("growth_residual: requires 0 < a_n < a_{n+1}");
  }
  const BigInt first = BigInt(n) + 2 - a_n1;
  const BigInt last = BigInt(n) - a_n;
  return w.range_sum(first, last) + 2 * (last - first + 1);
}

// --- Pi* --------------------------------------------------------------------

SeqWindow pi_star_window(Index m, Index n_max, std::optional<Index> left_bound) {
  if (m < 1) throw std::invalid_argument("pi_star_window: m must be >= 1");
  if (n_max < 3) throw std::invalid_argument("pi_star_window: n_max must be >= 3");
  if (left_bound && *left_bound > 0) {
    throw std::invalid_argument("pi_star_window: left_bound must be <= 0");
  }

  std::vector<BigInt> pi{BigInt(m), 2, BigInt(m + 4), BigInt(m + 8)};
  auto next = [&pi] {
    const auto j = static_cast<Index>(pi.size());
    pi.push_back(j % 2 == 0 ? BigInt(2 * pi[j - 1] - 2) : BigInt(pi[j - 1] + 4));
  };
  // Odd j place -pi*_j at -(pi*_j - j), further left as j grows.
  auto place = [&pi](Index j) { return BigInt(j) - pi[j]; };
  while (static_cast<Index>(pi.size()) <= n_max) next();
  Index last_odd = n_max % 2 == 1 ? n_max : n_max - 1;
  Index lo = to_int64(place(last_odd));
  if (left_bound) {
    // Keep placing until one lands left of the bound.
    while (place(last_odd) >= *left_bound) {
      last_odd += 2;
      while (static_cast<Index>(pi.size()) <= last_odd) next();
    }
    lo = *left_bound;
  }

  std::vector<BigInt> values(static_cast<std::size_t>(-lo), BigInt(-2));
  for (Index j = 3; j < static_cast<Index>(pi.size()); j += 2) {
    const BigInt pos = place(j);
    if (pos < lo) break;
    values[static_cast<std::size_t>(to_int64(pos) - lo)] = -pi[j];
  }
  values.insert(values.end(), pi.begin(), pi.begin() + n_max + 1);
  return SeqWindow(lo, std::move(values));
}

BigInt pi_star_even_closed(Index m, Index n) {
  if (n < 2) throw std::invalid_argument("pi_star_even_closed: n must be >= 2");
  return (BigInt(1) << (n - 1)) * (m + 10) - 6;
}

// --- tau --------------------------------------------------------------------

void TauConfig::validate() const {
  if (m < 1) throw InvalidConfig("tau: m must be >= 1");
  const Index p = period();
  if (static_cast<Index>(P.size()) != m || static_cast<Index>(N.size()) != m) {
    throw InvalidConfig("tau: |P| and |N| must both equal m = " + std::to_string(m));
  }
  std::vector<Index> q;
  q.insert(q.end(), P.begin(), P.end());
  q.insert(q.end(), N.begin(), N.end());
  for (Index x : q) {
    if (x < 1 || x > p) {
      throw InvalidConfig("tau: position " + std::to_string(x) + " outside [1, " +
                          std::to_string(p) + "]");
    }
  }
  std::sort(q.begin(), q.end());
  if (std::adjacent_find(q.begin(), q.end()) != q.end()) {
    throw InvalidConfig("tau: P and N must be disjoint sets");
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (i != j && (q[j] % p) + 1 == q[i]) {
        throw InvalidConfig("tau: positions " + std::to_string(q[j]) + " and " +
                            std::to_string(q[i]) + " are cyclically adjacent");
      }
    }
  }
}

std::vector<BigInt> TauConfig::unit() const {
  const Index p = period();
  std::vector<BigInt> u(static_cast<std::size_t>(p), BigInt(-2));
  for (Index x : P) u[static_cast<std::size_t>(x - 1)] = p;
  for (Index x : N) u[static_cast<std::size_t>(x - 1)] = -p;
  return u;
}

TauConfig TauConfig::from_unit(Index m, std::span<const BigInt> unit) {
  TauConfig c{m, {}, {}};
  for (std::size_t i = 0; i < unit.size(); ++i) {
    if (unit[i] > 0) c.P.push_back(static_cast<Index>(i) + 1);
    if (unit[i] < -2) c.N.push_back(static_cast<Index>(i) + 1);
  }
  return c;
}

SeqWindow tau_window(const TauConfig& c, Index periods) {
  c.validate();
  if (periods < 1) throw std::invalid_argument("tau_window: periods must be >= 1");
  const auto unit = c.unit();
  std::vector<BigInt> values;
  values.reserve(unit.size() * static_cast<std::size_t>(periods));
  for (Index i = 0; i < periods; ++i) values.insert(values.end(), unit.begin(), unit.end());
  return SeqWindow(1, std::move(values), ExtRule::periodic(unit), ExtRule::periodic(unit));
}

namespace {

// Signed unit encoded with the order of the real values: N < background < P.
using Code = std::vector<signed char>;

bool is_least_rotation(const Code& v) {
  const std::size_t n = v.size();
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = v[(i + s) % n];
      if (a != v[i]) {
        if (a < v[i]) return false;
        break;
      }
    }
  }
  return true;
}

void choose_positions(Index period, Index need, Index next, std::vector<Index>& current,
                      std::vector<std::vector<Index>>& out) {
  if (static_cast<Index>(current.size()) == need) {
    if (current.empty() || !(current.front() == 1 && current.back() == period)) {
      out.push_back(current);
    }
    return;
  }
  for (Index x = next; x <= period; ++x) {
    current.push_back(x);
    choose_positions(period, need, x + 2, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<TauConfig> tau_enumerate(Index m, bool canonical) {
  if (m < 1) throw std::invalid_argument("tau_enumerate: m must be >= 1");
  const Index period = 4 * m + 2;
  if (period > 30) {
    throw TooLarge("tau_enumerate: period " + std::to_string(period) + " exceeds 30");
  }
  std::vector<std::vector<Index>> supports;
  std::vector<Index> current;
  choose_positions(period, 2 * m, 1, current, supports);

  std::vector<TauConfig> out;
  std::vector<Code> codes;
  const auto width = static_cast<unsigned>(2 * m);
  for (const auto& q : supports) {
    for (unsigned mask = 0; mask < (1u << width); ++mask) {
      if (std::popcount(mask) != static_cast<int>(m)) continue;
      TauConfig c{m, {}, {}};
      Code code(static_cast<std::size_t>(period), 1);
      for (unsigned b = 0; b < width; ++b) {
        if (mask & (1u << b)) {
          c.P.push_back(q[b]);
          code[static_cast<std::size_t>(q[b] - 1)] = 2;
        } else {
          c.N.push_back(q[b]);
          code[static_cast<std::size_t>(q[b] - 1)] = 0;
        }
      }
      if (canonical && !is_least_rotation(code)) continue;
      out.push_back(std::move(c));
      if (canonical) codes.push_back(std::move(code));
    }
  }

  if (canonical) {
    std::vector<std::size_t> order(out.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return codes[a] < codes[b]; });
    std::vector<TauConfig> sorted;
    sorted.reserve(out.size());
    for (auto i : order) sorted.push_back(std::move(out[i]));
    return sorted;
  }
  std::sort(out.begin(), out.end(), [](const TauConfig& a, const TauConfig& b) {
    return std::tie(a.P, a.N) < std::tie(b.P, b.N);
  });
  return out;
}

// --- omega / composites -----------------------------------------------------

BigInt omega_value(Index k) {
  if (k >= 3 && k % 2 == 1) return 4 * ((k - 1) / 2) + 2;
  if (k <= -2 && k % 2 == 0) return -(4 * (-k / 2) + 2);
  return -2;
}

std::vector<BigInt> omega_segment(Index a, Index b) {
  if (a > b) throw std::invalid_argument("omega_segment: empty range");
  std::vector<BigInt> out;
  for (Index k = a; k <= b; ++k) out.push_back(omega_value(k));
  return out;
}

SeqWindow omega_window(Index half_extent) {
  if (half_extent < 2) throw std::invalid_argument("omega_window: half_extent must be >= 2");
  std::vector<BigInt> block{-2, -2, -2};
  Index alpha = 0;
  for (Index n = 1; n <= half_extent; ++n) {
    const BigInt v = 4 * n + 2;
    std::vector<BigInt> wrapped{-v, -2};
    wrapped.insert(wrapped.end(), block.begin(), block.end());
    wrapped.push_back(v);
    wrapped.push_back(-2);
    block = std::move(wrapped);
    alpha -= 2;

    const auto free = is_free(block, alpha);
    if (!free) {
      throw IdentityViolation("omega block [" + std::to_string(alpha) + ", " +
                              std::to_string(2 * n + 2) + "] is not free (condition " +
                              std::to_string(free.condition) + " at " +
                              std::to_string(free.position) + ")");
    }
    const BigInt sum = std::accumulate(block.begin(), block.end(), BigInt(0));
    if (sum != -4 * (n + 1) - 2) identity_failure("omega block sum", sum, -4 * (n + 1) - 2);
  }
  return SeqWindow(alpha, std::move(block));
}

SeqWindow composite_seed(const SeqWindow& left, std::span<const BigInt> mid, const BigInt& seed,
                         Index steps) {
  const BigInt seed_list[] = {seed};
  SeqWindow w = concat(concat(left, mid), seed_list);
  if (steps > 0) w = extend_right_by_O(w, steps);
  return w;
}

SeqWindow composite_family(const TauConfig& tau, std::span<const BigInt> mid, const BigInt& seed,
                           Index steps) {
  tau.validate();
  const auto unit = tau.unit();
  return composite_seed(breve(unit, -1 - static_cast<Index>(mid.size())), mid, seed, steps);
}

// --- approximation ----------------------------------------------------------

ApproxModel ApproxModel::build(Index m, Index base_n, const BigInt& u_n, const BigInt& u_n1) {
  if (m < 1) throw std::invalid_argument("ApproxModel: m must be >= 1");
  if (u_n == u_n1) throw DegenerateBase("ApproxModel: u_n == u_{n+1}");
  ApproxModel a;
  a.m = m;
  a.xi = Rational(2) - Rational(1, 2 * m + 1);
  a.base_n = base_n;
  a.u_n = u_n;
  a.u_n1 = u_n1;

  const double xi = a.xi.convert_to<double>();
  const double root = std::sqrt((xi - 2) * (xi - 2) + 4);
  a.phi_m = (xi + root) / 2;
  const double conj = xi - a.phi_m;
  const double x0 = to_double(u_n);
  const double x1 = to_double(u_n1);
  // Solves kappa+ + kappa- = u_n, kappa+ phi + kappa- (xi - phi) = u_{n+1}.
  a.kappa_plus = (x1 - conj * x0) / root;
  a.kappa_minus = (a.phi_m * x0 - x1) / root;

  const double r0 = a.kappa_plus + a.kappa_minus;
  const double r1 = a.kappa_plus * a.phi_m + a.kappa_minus * conj;
  if (std::abs(r0 - x0) > 1e-9 * std::max(1.0, std::abs(x0)) ||
      std::abs(r1 - x1) > 1e-9 * std::max(1.0, std::abs(x1))) {
    throw DegenerateBase("ApproxModel: two-point fit inconsistent beyond 1e-9");
  }
  return a;
}

double approx_predict(const ApproxModel& a, Index r) {
  if (r < 0) throw std::invalid_argument("approx_predict: r must be >= 0");
  const double conj = a.xi.convert_to<double>() - a.phi_m;
  return a.kappa_plus * std::pow(a.phi_m, static_cast<double>(r)) +
         a.kappa_minus * std::pow(conj, static_cast<double>(r));
}

ApproxReport approx_report(Index m, const SeqWindow& w, Index base_n, Index horizon) {
  ApproxReport rep{ApproxModel::build(m, base_n, w.value_at(base_n), w.value_at(base_n + 1)),
                   {}, 0, 0};
  for (Index r = 0; r <= horizon; ++r) {
    const BigInt exact = w.value_at(base_n + r);
    const double predicted = approx_predict(rep.model, r);
    const double x = to_double(exact);
    rep.rows.push_back({r, predicted, exact, std::abs(predicted - x) / std::abs(x)});
  }
  rep.empirical_ratio = to_double(rep.model.u_n1) / to_double(rep.model.u_n);
  rep.ratio_relative_error = std::abs(rep.empirical_ratio - rep.model.phi_m) / rep.model.phi_m;
  return rep;
}

// --- O^r eigen-sequences ----------------------------------------------------

void OPowerConfig::validate() const {
  if (r < 1) throw InvalidConfig("opower: r must be >= 1");
  if (static_cast<Index>(placement.size()) != r) {
    throw InvalidConfig("opower: placement must have exactly r = " + std::to_string(r) +
                        " entries");
  }
  Index total = 0;
  for (int s : placement) {
    if (s < -1 || s > 1) throw InvalidConfig("opower: placement entries must be +, - or 0");
    total += s * (r + 1);
  }
  if (total != -(r + 1)) {
    throw InvalidConfig("opower: unit sums to " + std::to_string(total) + ", expected " +
                        std::to_string(-(r + 1)));
  }
}

std::vector<BigInt> OPowerConfig::unit() const {
  std::vector<BigInt> u;
  u.reserve(placement.size());
  for (int s : placement) u.emplace_back(s * (r + 1));
  return u;
}

OPowerConfig OPowerConfig::odd_family(Index m) {
  if (m < 1) throw InvalidConfig("opower: m must be >= 1");
  OPowerConfig c{2 * m + 1, {}};
  c.placement.assign(static_cast<std::size_t>(m), 1);
  c.placement.insert(c.placement.end(), static_cast<std::size_t>(m + 1), -1);
  return c;
}

SeqWindow o_power_window(const OPowerConfig& c, Index periods) {
  c.validate();
  if (periods < 1) throw std::invalid_argument("o_power_window: periods must be >= 1");
  const auto unit = c.unit();
  std::vector<BigInt> values;
  for (Index i = 0; i < periods; ++i) values.insert(values.end(), unit.begin(), unit.end());
  return SeqWindow(1, std::move(values), ExtRule::periodic(unit), ExtRule::periodic(unit));
}

}  // namespace ultraseq
