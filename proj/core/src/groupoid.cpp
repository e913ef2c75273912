#include "germkit/groupoid.hpp"

namespace germkit {

AffineRational AffineRational::make(const Int& k, const Int& n, const Int& m) {
  if (n == 0 || m == 0) throw Error("degenerate affine map");
  Int kk = k, nn = n, mm = m;
  if (mm < 0) {
    kk = -kk;
    nn = -nn;
    mm = -mm;
  }
  Int g = gcd_any(gcd_any(kk, nn), mm);
  return AffineRational(kk / g, nn / g, mm / g);
}

AffineRational operator*(const AffineRational& a, const AffineRational& b) {
  return AffineRational::make(b.m() * a.k() + a.n() * b.k(), a.n() * b.n(), a.m() * b.m());
}

AffineRational inverse(const AffineRational& g) { return AffineRational::make(-g.k(), g.m(), g.n()); }

Germ germ_new(const TruncatedProfinite& r, const AffineRational& g) {
  Int n = abs(g.n());
  if (!divides(n, r.level())) throw Error("insufficient level");
  if (!divides(n, g.m() * r.value() - g.k())) throw Error("base not in domain");
  return Germ(r, g);
}

Germ germ_new(const TruncatedProfinite& r, const Int& k, const Int& n, const Int& m) {
  return germ_new(r, AffineRational::make(k, n, m));
}

Germ germ_of(const TruncatedProfinite& r, const Element& v) {
  if (v.is_zero() || !char_eval(r, range(v))) throw Error("base not in D_s");
  return germ_new(r, v.shift(), v.num(), v.den());
}

TruncatedProfinite range(const Germ& gamma) { return gamma.base(); }

TruncatedProfinite source(const Germ& gamma) {
  const auto& g = gamma.g();
  const auto& r = gamma.base();
  Int n = abs(g.n());
  Int scaled = g.m() * r.level();
  if (!divides(n, scaled)) throw Error("insufficient level");
  return TruncatedProfinite::make((g.m() * r.value() - g.k()) / g.n(), scaled / n);
}

namespace {

bool agree_on_common_level(const TruncatedProfinite& a, const TruncatedProfinite& b) {
  Int common = gcd(a.level(), b.level());
  return floor_mod(a.value() - b.value(), common) == 0;
}

}  // namespace

Germ compose(const Germ& gamma1, const Germ& gamma2) {
  if (!agree_on_common_level(source(gamma1), range(gamma2))) throw Error("source/range mismatch");
  return germ_new(gamma1.base(), gamma1.g() * gamma2.g());
}

Germ inverse(const Germ& gamma) { return germ_new(source(gamma), inverse(gamma.g())); }

bool germ_eq(const Germ& a, const Germ& b) {
  return a.g() == b.g() && agree_on_common_level(a.base(), b.base());
}

std::vector<Residue> isotropy_solutions(const AffineRational& g, const Int& level) {
  if (level <= 0) throw Error("level must be positive");
  std::vector<Residue> out;
  auto cls = solve_linear_congruence(g.m() - g.n(), g.k(), level);
  if (!cls) return out;
  for (Int r = cls->value; r < level; r += cls->modulus) out.push_back(Residue::make(r, level));
  return out;
}

bool translation_orbit_covers(const Int& q, const Int& level) {
  if (q <= 0 || level <= 0 || !divides(q, level)) throw Error("incompatible modulus");
  constexpr std::size_t kLimit = std::size_t{1} << 28;
  if (level > kLimit) throw Error("level too large to enumerate");
  auto size = static_cast<std::size_t>(level);
  auto step = static_cast<std::size_t>(q);
  std::vector<bool> hit(size, false);
  // translate the cylinder 0 + qZ by each j in [0, q)
  for (std::size_t j = 0; j < step; ++j) {
    for (std::size_t x = j; x < size; x += step) hit[x] = true;
  }
  for (bool h : hit) {
    if (!h) return false;
  }
  return true;
}

}  // namespace germkit
