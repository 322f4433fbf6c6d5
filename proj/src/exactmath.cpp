#include "ultraseq/exactmath.hpp"

#include <sstream>
#include <stdexcept>

namespace ultraseq {

namespace mp = boost::multiprecision;

bool QuadExt::is_integer() const {
  return b_ == 0 && mp::denominator(a_) == 1;
}

BigInt QuadExt::to_integer() const {
  if (!is_integer()) {
    std::ostringstream os;
    os << *this;
    throw std::domain_error("value is not an integer: " + os.str());
  }
  return mp::numerator(a_);
}

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n == 0) throw std::domain_error("QuadExt: division by zero");
  return {a_ / n, -b_ / n};
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  return os << "(" << x.a_ << " + " << x.b_ << "*sqrt5)";
}

namespace {

// (F_n, F_{n+1}) for n >= 0 by fast doubling.
std::pair<BigInt, BigInt> fib_pair(Index n) {
  if (n == 0) return {0, 1};
  auto [f, g] = fib_pair(n / 2);
  BigInt even = f * (2 * g - f);
  BigInt odd = f * f + g * g;
  if (n % 2 == 0) return {std::move(even), std::move(odd)};
  BigInt next = even + odd;
  return {std::move(odd), std::move(next)};
}

}  // namespace

BigInt fib(Index n) {
  if (n >= 0) return fib_pair(n).first;
  // F_{-n} = (-1)^{n+1} F_n
  const Index m = -n;
  BigInt f = fib_pair(m).first;
  return m % 2 == 0 ? BigInt(-f) : f;
}

BigInt lucas(Index n) { return fib(n - 1) + fib(n + 1); }

QuadExt quad_pow(const QuadExt& x, Index n) {
  if (n < 0) throw std::invalid_argument("quad_pow: negative exponent");
  QuadExt result{1, 0};
  QuadExt base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::pair<QuadExt, QuadExt> two_point_constants(const BigInt& first,
                                                const BigInt& second) {
  const QuadExt phi = QuadExt::phi();
  const QuadExt root5 = QuadExt::sqrt5();
  QuadExt beta = (QuadExt(first) * phi.inverse() + QuadExt(second)) / root5;
  QuadExt gamma = (QuadExt(first) * phi - QuadExt(second)) / root5;
  return {std::move(beta), std::move(gamma)};
}

BigInt closed_form_affine(const BigInt& a0, const BigInt& a1, const BigInt& eps,
                          Index n) {
  if (n < 0) throw std::invalid_argument("closed_form_affine: n must be >= 0");
  // Shifting by eps turns the affine recurrence into the homogeneous one.
  const auto [beta, gamma] = two_point_constants(a0 + eps, a1 + eps);
  const QuadExt value = beta * quad_pow(QuadExt::phi(), n) +
                        gamma * quad_pow(QuadExt::psi(), n) - QuadExt(eps);
  return value.to_integer();
}

}  // namespace ultraseq
