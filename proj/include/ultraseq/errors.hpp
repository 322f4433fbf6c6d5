#pragma once

#include <stdexcept>
#include <string>

#include "ultraseq/bigint.hpp"

namespace ultraseq {

/// Base of every error raised by the library.
class SeqError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfDomain : public SeqError {
 public:
  explicit OutOfDomain(BigInt index)
      : SeqError("index " + to_string(index) + " is outside the window domain"),
        index_(std::move(index)) {}
  const BigInt& index() const { return index_; }

 private:
  BigInt index_;
};

/// Inclusive index range [first, last] whose values must sum to zero for the
/// successor of a negative head to be consistent. Empty when first > last.
struct SumZeroConstraint {
  BigInt first;
  BigInt last;

  bool empty() const { return first > last; }
};

/// Raised when the successor of the head is not determined by the values
/// already present (heads of -2, or negatives <= -3).
class NonDeterministic : public SeqError {
 public:
  NonDeterministic(Index position, BigInt head, SumZeroConstraint constraint);

  Index position() const { return position_; }
  const BigInt& head() const { return head_; }
  const SumZeroConstraint& constraint() const { return constraint_; }

 private:
  Index position_;
  BigInt head_;
  SumZeroConstraint constraint_;
};

class WindowTooSmall : public SeqError {
 public:
  using SeqError::SeqError;
};

class WindowTooLarge : public SeqError {
 public:
  using SeqError::SeqError;
};

class NotPeriodic : public SeqError {
 public:
  explicit NotPeriodic(Index period)
      : SeqError("window is not periodic with period " + std::to_string(period)),
        period_(period) {}
  Index period() const { return period_; }

 private:
  Index period_;
};

class IncompatibleShape : public SeqError {
 public:
  using SeqError::SeqError;
};

class DomainExhausted : public SeqError {
 public:
  using SeqError::SeqError;
};

class InvalidConfig : public SeqError {
 public:
  using SeqError::SeqError;
};

class IdentityViolation : public SeqError {
 public:
  using SeqError::SeqError;
};

class TooLarge : public SeqError {
 public:
  using SeqError::SeqError;
};

class DegenerateBase : public SeqError {
 public:
  using SeqError::SeqError;
};

class IndexUnderflow : public SeqError {
 public:
  explicit IndexUnderflow(Index n)
      : SeqError("recursion reached an index below 1 while evaluating term " +
                 std::to_string(n)),
        n_(n) {}
  Index n() const { return n_; }

 private:
  Index n_;
};

}  // namespace ultraseq
