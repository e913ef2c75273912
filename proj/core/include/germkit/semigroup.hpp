#pragma once

#include <optional>
#include <vector>

#include "germkit/projection.hpp"

namespace germkit {

/// One generator of the semigroup: s_m, s_m^*, u^n or e_m.
struct Token {
  enum class Kind { S, SStar, U, E };

  Kind kind;
  Int value;

  static Token s(const Int& m);
  static Token s_star(const Int& m);
  static Token u(const Int& n) { return Token{Kind::U, n}; }
  static Token e(const Int& m);

  friend bool operator==(const Token&, const Token&) = default;
};

using Word = std::vector<Token>;

/// A canonical element of the inverse semigroup T: the partial injection
/// x -> (num*x + shift)/den of Z restricted to the class dom, or zero.
///
/// The affine triple is reduced (gcd(|num|, |shift|, den) == 1, den > 0) and
/// dom lies inside the set where num*x + shift is divisible by den. Two
/// nonzero elements are equal as partial maps iff they are structurally equal.
class Element {
 public:
  Element() = default;  // zero

  static Element zero() { return {}; }
  static Element unit() { return Element(1, 0, 1, Projection::unit()); }

  /// Reduces the triple and validates dom. A zero dom yields the zero element.
  static Element make(const Int& num, const Int& shift, const Int& den, const Projection& dom);

  static Element s(const Int& m);
  static Element s_star(const Int& m);
  static Element u(const Int& n);
  static Element e(const Int& m);
  static Element of_projection(const Projection& p);
  static Element of_token(const Token& t);

  bool is_zero() const { return dom_.is_zero(); }

  const Int& num() const { return num_; }
  const Int& shift() const { return shift_; }
  const Int& den() const { return den_; }
  const Projection& dom() const { return dom_; }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Element(Int num, Int shift, Int den, Projection dom)
      : num_(std::move(num)), shift_(std::move(shift)), den_(std::move(den)), dom_(std::move(dom)) {}

  Int num_ = 1;
  Int shift_ = 0;
  Int den_ = 1;
  Projection dom_;
};

/// v * w, acting as v after w.
Element mul(const Element& v, const Element& w);

Element star(const Element& v);

/// v^* v, the domain class.
Projection source(const Element& v);

/// v v^*, the image class.
Projection range(const Element& v);

/// The projection v when v is idempotent (identity affine part).
std::optional<Projection> as_projection(const Element& v);

/// Left-to-right product of the tokens, starting from the unit.
Element normalize(const Word& w);

/// Canonical word s_den^* u^a e_c u^b s_num with normalize(to_word(v)) == v;
/// trivial factors are omitted. Throws for zero.
Word to_word(const Element& v);

/// (num*x + shift)/den when x is in dom.
std::optional<Int> apply(const Element& v, const Int& x);

}  // namespace germkit
