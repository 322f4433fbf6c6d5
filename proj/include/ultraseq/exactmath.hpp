#pragma once

#include <ostream>
#include <utility>

#include "ultraseq/bigint.hpp"

namespace ultraseq {

/// Exact element a + b*sqrt(5) of Q(sqrt 5).
///
/// Both components are canonical rationals, so equality is plain
/// componentwise equality. No floating point is involved anywhere.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  QuadExt(const BigInt& integer) : a_(integer), b_(0) {}

  static QuadExt sqrt5() { return {0, 1}; }
  /// (1 + sqrt 5) / 2
  static QuadExt phi() { return {Rational(1, 2), Rational(1, 2)}; }
  /// 1 - phi = (1 - sqrt 5) / 2
  static QuadExt psi() { return {Rational(1, 2), Rational(-1, 2)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const;
  /// Integer value; throws std::domain_error unless is_integer().
  BigInt to_integer() const;

  /// a^2 - 5 b^2
  Rational norm() const { return a_ * a_ - 5 * b_ * b_; }
  QuadExt conjugate() const { return {a_, -b_}; }
  QuadExt inverse() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

 private:
  Rational a_{0};
  Rational b_{0};
};

/// Fibonacci number for any integer index; negative indices follow the
/// recurrence run backwards (F_{-n} = (-1)^{n+1} F_n).
BigInt fib(Index n);

/// Lucas number for any integer index (L_{-n} = (-1)^n L_n).
BigInt lucas(Index n);

/// Exact n-fold product, square-and-multiply. Requires n >= 0.
QuadExt quad_pow(const QuadExt& x, Index n);

/// Constants (beta, gamma) with beta + gamma = first and
/// beta*phi + gamma*psi = second, so that any sequence obeying
/// L_k = L_{k-1} + L_{k-2} with L_e = first, L_{e+1} = second is
/// beta*phi^(k-e) + gamma*psi^(k-e).
std::pair<QuadExt, QuadExt> two_point_constants(const BigInt& first,
                                                const BigInt& second);

/// n-th term of L_0 = a0, L_1 = a1, L_n = L_{n-1} + L_{n-2} + eps,
/// evaluated as beta*phi^n + gamma*psi^n - eps in Q(sqrt 5).
BigInt closed_form_affine(const BigInt& a0, const BigInt& a1, const BigInt& eps,
                          Index n);

}  // namespace ultraseq
