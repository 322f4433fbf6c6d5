#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ultraseq/families.hpp"
#include "ultraseq/transform.hpp"

namespace ultraseq {

/// A family named in CLI syntax, e.g.
///   pi:m=3   pistar:m=1   tau:m=2,P=6;9,N=1;3   omega:extent=4
///   opower:r=3,unit=+,-,-   opower:m=2
///   composite:left=tau:m=1,P=5,N=1,mid=omega:-4..6,seed=1,steps=20
///   grec:P=1,Q=-1,r=2,init=1;1;2;3
struct FamilyDescriptor {
  enum class Kind { pi, pistar, tau, omega, opower, composite, grec };

  Kind kind = Kind::pi;
  Index m = 1;                   // pi, pistar; tau's m lives in `tau`
  TauConfig tau;                 // tau, composite (left)
  std::optional<Index> extent;   // omega
  OPowerConfig opower;           // opower
  std::vector<BigInt> mid;       // composite
  BigInt seed = 1;               // composite
  std::optional<Index> steps;    // composite
  GParams g{1, -1};              // grec
  Index r = 1;                   // grec
  std::vector<BigInt> init;      // grec

  /// Throws std::invalid_argument naming the offending key or value.
  static FamilyDescriptor parse(std::string_view text);

  /// A window defined on at least [a, b + 1] when the family allows it, so
  /// that every position in [a, b] can be both read and checked.
  SeqWindow window(Index a, Index b) const;
};

/// "a..b" with optional signs on both bounds; throws std::invalid_argument.
std::pair<Index, Index> parse_range(std::string_view text);

}  // namespace ultraseq
