#pragma once

#include <vector>

#include "germkit/projection.hpp"

namespace germkit {

/// A profinite integer known modulo level: the clopen cylinder of all
/// r in Z-hat with r == value (mod level). Doubles as the tight character
/// xi_r restricted to classes whose modulus divides level.
class TruncatedProfinite {
 public:
  static TruncatedProfinite make(const Int& value, const Int& level);

  const Int& value() const { return value_; }
  const Int& level() const { return level_; }

  friend bool operator==(const TruncatedProfinite&, const TruncatedProfinite&) = default;

 private:
  TruncatedProfinite(Int value, Int level) : value_(std::move(value)), level_(std::move(level)) {}

  Int value_;
  Int level_;
};

/// r_q; requires q | level.
Residue residue(const TruncatedProfinite& r, const Int& q);

/// xi_r(p): true iff r lies in the class p. Zero evaluates to false.
bool char_eval(const TruncatedProfinite& r, const Projection& p);

/// A finite set of nonzero projections from the level-M universe
/// E_M = { classes with modulus dividing M } u {0}. Members are kept sorted.
struct FilterSet {
  Int level;
  std::vector<Projection> members;

  static FilterSet make(Int level, std::vector<Projection> members);
  bool contains(const Projection& p) const;

  friend bool operator==(const FilterSet&, const FilterSet&) = default;
};

/// The nonzero part of E_M, ordered by modulus then shift.
std::vector<Projection> level_universe(const Int& level);

/// Nonempty, excludes zero, upward closed inside E_M, closed under meet.
bool is_filter(const FilterSet& a);

/// The support { e in E_M : xi_r(e) = 1 } at r's own level.
FilterSet filter_support(const TruncatedProfinite& r);

/// Every e in E_M meeting all members of a is already a member.
/// Throws "not a filter" when a fails the filter axioms at that level.
bool is_maximal_filter(const FilterSet& a, const Int& level);

/// The M ultrafilters of E_M, the supports of value at level M for
/// value = 0..M-1.
std::vector<FilterSet> ultrafilters(const Int& level);

}  // namespace germkit
