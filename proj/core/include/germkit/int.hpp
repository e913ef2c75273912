#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace germkit {

/// Arbitrary precision integer used by every symbolic computation.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                         boost::multiprecision::et_off>;

/// Domain error raised by arithmetic, semilattice and groupoid operations.
class Error : public std::domain_error {
 public:
  explicit Error(const std::string& what) : std::domain_error(what) {}
};

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Least nonnegative residue of a modulo |m|; m != 0.
inline Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

/// true iff d divides a; d != 0.
inline bool divides(const Int& d, const Int& a) { return a % d == 0; }

inline std::string to_string(const Int& a) { return a.str(); }

/// Narrowing to 64 bits, empty when the value does not fit.
inline std::optional<std::int64_t> to_i64(const Int& a) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (a < lo || a > hi) return std::nullopt;
  return static_cast<std::int64_t>(a);
}

}  // namespace germkit
