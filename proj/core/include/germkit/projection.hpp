#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "germkit/arith.hpp"

namespace germkit {

/// An idempotent u^shift e_modulus u^-shift of the semigroup, i.e. the
/// arithmetic class shift + modulus*Z, or the zero projection.
///
/// Classes are stored normalized (0 <= shift < modulus, modulus > 0), so
/// structural equality coincides with equality of the underlying sets.
class Projection {
 public:
  Projection() = default;  // zero

  static Projection zero() { return {}; }
  static Projection unit() { return Projection(Residue{0, 1}); }

  /// The class shift mod |modulus|; a negative modulus denotes the same
  /// final projection as its absolute value.
  static Projection of_class(const Int& shift, const Int& modulus) {
    return Projection(Residue::make(shift, modulus));
  }
  static Projection of_residue(const Residue& r) { return Projection(r); }

  bool is_zero() const { return !cls_.has_value(); }
  bool is_unit() const { return cls_ && cls_->modulus == 1; }

  /// Valid only for nonzero projections.
  const Int& shift() const { return checked().value; }
  const Int& modulus() const { return checked().modulus; }
  const Residue& residue() const { return checked(); }

  bool contains(const Int& x) const { return cls_ && cls_->contains(x); }

  friend bool operator==(const Projection&, const Projection&) = default;

  /// Zero first, then by modulus, then by shift.
  friend std::strong_ordering operator<=>(const Projection& a, const Projection& b);

 private:
  explicit Projection(Residue r) : cls_(std::move(r)) {}
  const Residue& checked() const;

  std::optional<Residue> cls_;
};

Projection meet(const Projection& p, const Projection& q);

/// p <= q iff meet(p, q) == p.
bool leq(const Projection& p, const Projection& q);

bool orthogonal(const Projection& p, const Projection& q);

/// The level-M classes partitioning p; requires p.modulus() | M.
std::vector<Projection> refine(const Projection& p, const Int& level);

/// u^n p u^-n.
Projection conj_u(const Projection& p, const Int& n);

/// s_m p s_m^*, the image of p under x -> m x.
Projection conj_s(const Projection& p, const Int& m);

/// s_m^* p s_m, the preimage of p under x -> m x.
Projection conj_s_star(const Projection& p, const Int& m);

/// Every nonzero z <= p meets some member of family.
/// Decided by checking that each level-L child of p lies under some member,
/// L the lcm of all moduli involved.
bool is_cover(std::span<const Projection> family, const Projection& p);

/// The union of the classes in family equals the class p, compared as
/// subsets of Z/L.
bool is_tight_sup(std::span<const Projection> family, const Projection& p);

}  // namespace germkit
