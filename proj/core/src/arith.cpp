#include "germkit/arith.hpp"

namespace germkit {

Residue Residue::make(const Int& value, const Int& modulus) {
  if (modulus == 0) throw Error("zero modulus");
  Int m = abs(modulus);
  return Residue{floor_mod(value, m), m};
}

Int gcd_any(const Int& a, const Int& b) {
  Int x = abs(a);
  Int y = abs(b);
  while (y != 0) {
    Int r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Int gcd(const Int& a, const Int& b) {
  if (a == 0 || b == 0) throw Error("zero argument");
  return gcd_any(a, b);
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) throw Error("zero argument");
  return abs(a) / gcd_any(a, b) * abs(b);
}

Bezout extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return Bezout{old_r, old_s, old_t};
}

std::optional<Residue> solve_linear_congruence(const Int& a, const Int& b,
                                               const Int& modulus) {
  if (modulus <= 0) throw Error("modulus must be positive");
  Int ar = floor_mod(a, modulus);
  Int br = floor_mod(b, modulus);
  Bezout bz = extended_gcd(ar, modulus);
  // bz.g == gcd(ar, modulus) > 0 since modulus > 0
  if (br % bz.g != 0) return std::nullopt;
  Int reduced = modulus / bz.g;
  return Residue::make(bz.x * (br / bz.g), reduced);
}

std::optional<Residue> crt_meet(const Residue& r1, const Residue& r2) {
  // x = r1.value + r1.modulus * j, and r1.modulus * j == r2.value - r1.value (mod r2.modulus)
  auto j = solve_linear_congruence(r1.modulus, r2.value - r1.value, r2.modulus);
  if (!j) return std::nullopt;
  return Residue::make(r1.value + r1.modulus * j->value, r1.modulus * j->modulus);
}

}  // namespace germkit
