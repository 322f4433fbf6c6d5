#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ultraseq/bigint.hpp"
#include "ultraseq/seqcore.hpp"

namespace ultraseq {

// ---------------------------------------------------------------------------
// Pi family: constant -2 to the left of position 0, seed m at 0.
// ---------------------------------------------------------------------------

/// Pi_m materialized on [0, n_max], left tail constant -2. The generated
/// values are cross-checked against the partial-sum form
/// pi_{n+1} = S_n + 2n + 2 and the recurrence pi_p = pi_{p-1} + pi_{p-2} + 2.
SeqWindow pi_window(Index m, Index n_max);

enum class ClosedFormMethod { fib, quad };

/// fib:  m F_{n-1} + 2 F_{n+2} - 2
/// quad: B_m phi^n + C_m psi^n - 2 in Q(sqrt 5), with
///       B_m = ((m+2) phi + 2 - m) / sqrt5, C_m = ((m+2) phi - 4) / sqrt5.
BigInt pi_closed(Index m, Index n, ClosedFormMethod method = ClosedFormMethod::fib);

/// pi_{t,n} + (m - t) F_{n-1}; throws IdentityViolation if it disagrees with
/// pi_closed(m, n).
BigInt pi_row_relation(Index m, Index t, Index n);

/// pi_{t,e} F_{n-e-1} + pi_{t,e+1} F_{n-e} + 2 F_{n-e+1} + (m - t) F_{n-1} - 2;
/// throws IdentityViolation if it disagrees with pi_closed(m, n). Requires n >= e.
BigInt pi_two_point(Index m, Index t, Index e, Index n);

struct IdentityCheck {
  std::string name;
  BigInt lhs;
  BigInt rhs;

  bool holds() const { return lhs == rhs; }
};

struct DeltaReport {
  Index m = 0, k = 0, n = 0;
  std::vector<IdentityCheck> checks;  // only the identities applicable at (k, n)

  bool all_hold() const;
  /// Throws IdentityViolation naming the first failing identity.
  void require() const;
};

/// Evaluates, on the k-th difference of the generated Pi_m window at n:
///   fibonacci-form  Delta^k pi_{m,n} = m F_{n-1-k} + 2 F_{n+2-k}          (n > 0)
///   three-term      Delta^k pi_{m,n} = Delta^k pi_{m,n-1} + Delta^k pi_{m,n-2}  (n >= 2)
///   shifted-row     Delta^k pi_{m,n} = pi_{m,n-k} + 2                      (1 <= k <= n-1)
///   row-lucas (m=1): L_{n+2-k}; row-fibonacci (m=2): 4 F_{n-k};
///   row-lucas (m=6): 4 L_{n-k}                                            (n >= 0)
/// The forms are evaluated as written; see require() for failures.
DeltaReport delta_identities(Index m, Index k, Index n);

/// Growth residual R = sum_{i=n+2-a_{n+1}}^{n-a_n} (a_i + 2) for a window
/// with 0 < a_n < a_{n+1}; then a_{n+2} = a_{n+1} + a_n + R + 2 whenever the
/// window is an eigen-sequence.
BigInt growth_residual(const SeqWindow& w, Index n);

// ---------------------------------------------------------------------------
// Pi* family.
// ---------------------------------------------------------------------------

/// Right side: pi_m on [0, 3], then pi*_{2n} = 2 pi*_{2n-1} - 2 and
/// pi*_{2n+1} = pi*_{2n} + 4 up to n_max. Left side: -pi*_j at position
/// -(pi*_j - j) for every odd j >= 3 whose position falls in the window, -2
/// elsewhere. Without `left_bound` the window starts at the placement of the
/// largest odd j <= n_max; with it, the window starts exactly at left_bound
/// and every placement at or right of it is included. The left side is
/// undefined either way.
SeqWindow pi_star_window(Index m, Index n_max, std::optional<Index> left_bound = std::nullopt);

/// 2^{n-1} (m + 10) - 6, the value at index 2n (n >= 2).
BigInt pi_star_even_closed(Index m, Index n);

// ---------------------------------------------------------------------------
// Periodic tau family.
// ---------------------------------------------------------------------------

struct TauConfig {
  Index m = 1;
  std::vector<Index> P;  // 1-based positions holding +(4m+2)
  std::vector<Index> N;  // 1-based positions holding -(4m+2)

  Index period() const { return 4 * m + 2; }
  /// Throws InvalidConfig naming the violated invariant.
  void validate() const;
  /// Values at positions 1..period.
  std::vector<BigInt> unit() const;
  /// Inverse of unit() for a valid signed unit.
  static TauConfig from_unit(Index m, std::span<const BigInt> unit);

  friend bool operator==(const TauConfig&, const TauConfig&) = default;
};

/// Fully periodic window on [1, periods * (4m+2)] with periodic tails.
SeqWindow tau_window(const TauConfig& c, Index periods);

/// Every valid configuration (sorted by P then N), or with `canonical` one
/// representative per rotation class: the lexicographically least rotation of
/// the signed unit (sorted by unit). Throws TooLarge when 4m+2 > 30.
std::vector<TauConfig> tau_enumerate(Index m, bool canonical);

// ---------------------------------------------------------------------------
// omega and composite windows.
// ---------------------------------------------------------------------------

/// omega_k: 4n+2 at k = 2n+1, -(4n+2) at k = -2n (n > 0), -2 elsewhere.
BigInt omega_value(Index k);

/// Values of omega on [a, b].
std::vector<BigInt> omega_segment(Index a, Index b);

/// omega on [-2E, 2E+2], grown from (-2,-2,-2) by wrapping
/// (-(4n+2), -2, ..., 4n+2, -2); every intermediate block is checked to be
/// free with sum -4(n+1)-2.
SeqWindow omega_window(Index half_extent);

/// concat(left, mid), then seed, then `steps` generated values.
SeqWindow composite_seed(const SeqWindow& left, std::span<const BigInt> mid, const BigInt& seed,
                         Index steps);

/// Convenience placement used throughout: the breve of the tau unit followed
/// by `mid`, with the seed landing on position 0.
SeqWindow composite_family(const TauConfig& tau, std::span<const BigInt> mid, const BigInt& seed,
                           Index steps);

// ---------------------------------------------------------------------------
// Growth approximation for sequences with a tau tail on the left.
// ---------------------------------------------------------------------------

struct ApproxModel {
  Index m = 1;
  Rational xi;  // 2 - 1/(2m+1)
  double phi_m = 0;
  double kappa_plus = 0;
  double kappa_minus = 0;
  Index base_n = 0;
  BigInt u_n;
  BigInt u_n1;

  /// Fits kappa so that r = 0 and r = 1 reproduce u_n and u_n1. Throws
  /// DegenerateBase when u_n == u_n1 or the fit misses by more than 1e-9.
  static ApproxModel build(Index m, Index base_n, const BigInt& u_n, const BigInt& u_n1);
};

/// kappa+ phi_m^r + kappa- (xi - phi_m)^r
double approx_predict(const ApproxModel& a, Index r);

struct ApproxRow {
  Index r;
  double predicted;
  BigInt exact;
  double relative_error;
};

struct ApproxReport {
  ApproxModel model;
  std::vector<ApproxRow> rows;
  double empirical_ratio = 0;  // u_{n+1} / u_n at the base
  double ratio_relative_error = 0;
};

/// Builds the model at base_n from w and compares r = 0..horizon against w.
ApproxReport approx_report(Index m, const SeqWindow& w, Index base_n, Index horizon);

// ---------------------------------------------------------------------------
// Eigen-sequences of O^r.
// ---------------------------------------------------------------------------

struct OPowerConfig {
  Index r = 1;
  std::vector<int> placement;  // +1, -1 or 0 per position, length r

  /// Throws InvalidConfig.
  void validate() const;
  std::vector<BigInt> unit() const;
  /// m entries 2m+2 followed by m+1 entries -(2m+2); r = 2m+1.
  static OPowerConfig odd_family(Index m);
};

/// Fully periodic window on [1, periods * r].
SeqWindow o_power_window(const OPowerConfig& c, Index periods);

}  // namespace ultraseq
