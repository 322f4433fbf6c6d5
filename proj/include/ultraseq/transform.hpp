#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "ultraseq/seqcore.hpp"

namespace ultraseq {

/// One slot of the general transformation: an integer-valued function of the
/// position p and the value u_p found there.
using Slot = std::function<BigInt(const BigInt& p, const BigInt& u)>;

/// Slots F1..F6 of
///   nu_{p+1} = sum_{i=F1}^{F2-1} [ F3 * u_{p*F4 - i*F5*sign(u_p)} + F6 ].
/// F2 - F1 is the number of summands and must be non-negative.
struct HParams {
  Slot f1, f2, f3, f4, f5, f6;

  static HParams constant(BigInt f1, BigInt f2, BigInt f3, BigInt f4, BigInt f5, BigInt f6);
  /// H(0, |u_p|, 1, 1, 1, 1). The sign of u_p already enters through the
  /// index formula, so F5 = 1 makes negative heads read their successors.
  static HParams O();
};

/// Lambda'_q = P * Lambda_{q-1} - Q * Lambda_{q-2}
struct GParams {
  BigInt P;
  BigInt Q;
};

/// Applies H. The output holds exactly the positions whose references are all
/// defined (the longest contiguous run when there are gaps). A periodic input
/// tail yields a periodic output tail only after one full period plus one
/// element has been evaluated and matched; otherwise that side is undefined.
/// Throws DomainExhausted when no position is computable.
SeqWindow apply_H(const HParams& h, const SeqWindow& w);

SeqWindow apply_O(const SeqWindow& w);

SeqWindow apply_G(const GParams& g, const SeqWindow& w);

/// Window at positions 0..2r+n-1 holding `initial` followed by n terms of
///   Lambda_q = sum_{i=0}^{r} (-1)^i C(r,i) P^{r-i} Q^i Lambda_{q-r-i},
/// the recurrence of sequences left invariant by r applications of G.
/// Throws std::invalid_argument unless initial.size() == 2r.
SeqWindow recurrence_1_3_extend(const GParams& g, Index r, std::span<const BigInt> initial,
                                Index n);

/// A'_{p+1} = A_p
SeqWindow shift_L(const SeqWindow& w);

struct Transformation {
  enum class Kind { O, L, G, H };

  Kind kind = Kind::O;
  GParams g{};
  HParams h{};
  std::string name = "O";

  static Transformation o() { return {}; }
  static Transformation l() { return {Kind::L, {}, {}, "L"}; }
  static Transformation G(GParams params);
  static Transformation H(HParams params, std::string name);

  /// Catalog lookup: "O", "L", "fib-like" (u_p + u_{p-1}) and "G:P,Q".
  /// Throws std::invalid_argument for unknown names.
  static Transformation by_name(std::string_view name);

  SeqWindow operator()(const SeqWindow& w) const;
};

/// n-fold composition. Throws DomainExhausted if the window empties first.
SeqWindow iterate(const Transformation& t, Index n, const SeqWindow& w);

}  // namespace ultraseq
