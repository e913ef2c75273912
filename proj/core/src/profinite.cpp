#include "germkit/profinite.hpp"

#include <algorithm>

namespace germkit {

TruncatedProfinite TruncatedProfinite::make(const Int& value, const Int& level) {
  if (level <= 0) throw Error("level must be positive");
  return TruncatedProfinite(floor_mod(value, level), level);
}

Residue residue(const TruncatedProfinite& r, const Int& q) {
  if (q <= 0 || !divides(q, r.level())) throw Error("insufficient level");
  return Residue::make(r.value(), q);
}

bool char_eval(const TruncatedProfinite& r, const Projection& p) {
  if (p.is_zero()) return false;
  return residue(r, p.modulus()).value == p.shift();
}

FilterSet FilterSet::make(Int level, std::vector<Projection> members) {
  if (level <= 0) throw Error("level must be positive");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return FilterSet{std::move(level), std::move(members)};
}

bool FilterSet::contains(const Projection& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

namespace {

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Projection> level_universe(const Int& level) {
  if (level <= 0) throw Error("level must be positive");
  std::vector<Projection> out;
  for (const auto& q : divisors(level)) {
    for (Int rho = 0; rho < q; ++rho) out.push_back(Projection::of_class(rho, q));
  }
  return out;
}

bool is_filter(const FilterSet& a) {
  if (a.members.empty()) return false;
  for (const auto& e : a.members) {
    if (e.is_zero() || !divides(e.modulus(), a.level)) return false;
  }
  // Upward closure: every coarser class of a member. Those are exactly
  // the (shift mod d) for d | modulus.
  for (const auto& e : a.members) {
    for (const auto& d : divisors(e.modulus())) {
      if (!a.contains(Projection::of_class(e.shift(), d))) return false;
    }
  }
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    for (std::size_t j = i + 1; j < a.members.size(); ++j) {
      Projection m = meet(a.members[i], a.members[j]);
      if (m.is_zero() || !a.contains(m)) return false;
    }
  }
  return true;
}

FilterSet filter_support(const TruncatedProfinite& r) {
  std::vector<Projection> members;
  for (const auto& q : divisors(r.level())) members.push_back(Projection::of_class(r.value(), q));
  return FilterSet::make(r.level(), std::move(members));
}

bool is_maximal_filter(const FilterSet& a, const Int& level) {
  FilterSet at_level{level, a.members};
  if (!is_filter(at_level)) throw Error("not a filter");
  for (const auto& e : level_universe(level)) {
    if (a.contains(e)) continue;
    bool meets_all = std::all_of(a.members.begin(), a.members.end(),
                                 [&](const Projection& f) { return !orthogonal(e, f); });
    if (meets_all) return false;
  }
  return true;
}

std::vector<FilterSet> ultrafilters(const Int& level) {
  if (level <= 0) throw Error("level must be positive");
  std::vector<FilterSet> out;
  for (Int v = 0; v < level; ++v) out.push_back(filter_support(TruncatedProfinite::make(v, level)));
  return out;
}

}  // namespace germkit
