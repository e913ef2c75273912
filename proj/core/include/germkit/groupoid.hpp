#pragma once

#include <vector>

#include "germkit/profinite.hpp"
#include "germkit/semigroup.hpp"

namespace germkit {

/// The element [[1, 0], [k/m, n/m]] of P_Q, stored reduced with m > 0 so
/// that the germ of s_m^* u^k s_n carries exactly (k, n, m).
class AffineRational {
 public:
  static AffineRational make(const Int& k, const Int& n, const Int& m);
  static AffineRational identity() { return AffineRational(0, 1, 1); }

  const Int& k() const { return k_; }
  const Int& n() const { return n_; }
  const Int& m() const { return m_; }

  bool is_identity() const { return k_ == 0 && n_ == 1 && m_ == 1; }

  friend bool operator==(const AffineRational&, const AffineRational&) = default;

 private:
  AffineRational(Int k, Int n, Int m) : k_(std::move(k)), n_(std::move(n)), m_(std::move(m)) {}

  Int k_;
  Int n_;
  Int m_;
};

/// Matrix product; corresponds to the product of s_m1^* u^k1 s_n1 and
/// s_m2^* u^k2 s_n2 with projections omitted.
AffineRational operator*(const AffineRational& a, const AffineRational& b);

AffineRational inverse(const AffineRational& g);

/// An arrow [(r, s_m^* u^k s_n)] of the tight groupoid with r truncated.
/// Range is r; source is (m r - k)/n.
class Germ {
 public:
  const TruncatedProfinite& base() const { return base_; }
  const AffineRational& g() const { return g_; }

  friend Germ germ_new(const TruncatedProfinite& r, const AffineRational& g);

 private:
  Germ(TruncatedProfinite base, AffineRational g) : base_(std::move(base)), g_(std::move(g)) {}

  TruncatedProfinite base_;
  AffineRational g_;
};

/// Validates that m r - k is divisible by n at r's level.
/// Errors: "insufficient level" when |n| does not divide the level,
/// "base not in domain" when the congruence fails.
Germ germ_new(const TruncatedProfinite& r, const AffineRational& g);
Germ germ_new(const TruncatedProfinite& r, const Int& k, const Int& n, const Int& m);

/// The germ of v at r, dropping v's domain projection. Requires r in the
/// range class of v ("base not in D_s" otherwise).
Germ germ_of(const TruncatedProfinite& r, const Element& v);

TruncatedProfinite range(const Germ& gamma);

/// (m*value - k)/n at level m*M/|n|.
TruncatedProfinite source(const Germ& gamma);

/// gamma1 after gamma2; requires source(gamma1) to agree with
/// range(gamma2) modulo the gcd of their levels.
Germ compose(const Germ& gamma1, const Germ& gamma2);

Germ inverse(const Germ& gamma);

/// Same base on the common level and identical reduced triples.
bool germ_eq(const Germ& a, const Germ& b);

/// Residues r mod M fixed by g at truncation: (m - n) r == k (mod M).
std::vector<Residue> isotropy_solutions(const AffineRational& g, const Int& level);

/// Integer translates of the cylinder (0 mod q) cover Z/M; requires q | M.
bool translation_orbit_covers(const Int& q, const Int& level);

}  // namespace germkit
