#pragma once

#include <optional>
#include <set>
#include <span>

#include "germkit/projection.hpp"

namespace germkit {

/// The element [[1, 0], [k, m]] of P_N, k >= 0, m >= 1.
struct PElem {
  Int k;
  Int m;

  static PElem make(const Int& k, const Int& m);
  static PElem identity() { return PElem{0, 1}; }

  friend bool operator==(const PElem&, const PElem&) = default;
  /// Lexicographic on (k, m).
  friend std::strong_ordering operator<=>(const PElem& a, const PElem& b);
};

/// s t as matrices: (k_s + m_s k_t, m_s m_t).
PElem operator*(const PElem& s, const PElem& t);

/// s <= t iff s^-1 t lies in P_N.
bool qleq(const PElem& s, const PElem& t);

/// s and t have a common upper bound in P_N.
bool cub_exists(const PElem& s, const PElem& t);

/// Least common upper bound sigma(s, t), empty when none exists.
std::optional<PElem> sigma(const PElem& s, const PElem& t);

/// Every element of P_N has a common upper bound with some member.
bool covers_P(std::span<const PElem> family);

/// { t^-1 f } covers P_N; every f must satisfy t <= f.
bool covers_interval(std::span<const PElem> family, const PElem& t);

/// The class k mod m underlying the upper set of s.
Projection pelem_to_projection(const PElem& s);

/// { a : s <= a, k_a <= K, m_a <= K }.
std::set<PElem> upper_set_window(const PElem& s, const Int& window);

}  // namespace germkit
