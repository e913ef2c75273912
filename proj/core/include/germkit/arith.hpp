#pragma once

#include <optional>

#include "germkit/int.hpp"

namespace germkit {

/// An arithmetic class value + modulus*Z, kept with 0 <= value < modulus.
struct Residue {
  Int value;
  Int modulus;

  /// Reduces value into [0, |modulus|). Throws on modulus == 0.
  static Residue make(const Int& value, const Int& modulus);

  bool contains(const Int& x) const { return floor_mod(x - value, modulus) == 0; }

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Positive gcd; both arguments must be nonzero.
Int gcd(const Int& a, const Int& b);

/// Positive lcm; both arguments must be nonzero.
Int lcm(const Int& a, const Int& b);

/// gcd that tolerates zeros: gcd_any(0, b) = |b|, gcd_any(0, 0) = 0.
Int gcd_any(const Int& a, const Int& b);

struct Bezout {
  Int g;  // nonnegative gcd
  Int x;
  Int y;  // a*x + b*y == g
};

Bezout extended_gcd(const Int& a, const Int& b);

/// Intersection of two arithmetic classes (Chinese remainder theorem).
/// Empty iff the values disagree modulo gcd of the moduli; otherwise the
/// unique class modulo lcm congruent to both.
std::optional<Residue> crt_meet(const Residue& r1, const Residue& r2);

/// All x with a*x == b (mod modulus), as a single class, or empty.
/// modulus > 0; a may be zero.
std::optional<Residue> solve_linear_congruence(const Int& a, const Int& b,
                                               const Int& modulus);

}  // namespace germkit
