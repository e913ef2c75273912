#include "germkit/semigroup.hpp"

namespace germkit {

namespace {

void require_nonzero(const Int& m) {
  if (m == 0) throw Error("zero modulus");
}

}  // namespace

Token Token::s(const Int& m) {
  require_nonzero(m);
  return Token{Kind::S, m};
}

Token Token::s_star(const Int& m) {
  require_nonzero(m);
  return Token{Kind::SStar, m};
}

Token Token::e(const Int& m) {
  require_nonzero(m);
  return Token{Kind::E, m};
}

Element Element::make(const Int& num, const Int& shift, const Int& den, const Projection& dom) {
  if (num == 0 || den == 0) throw Error("degenerate affine map");
  if (dom.is_zero()) return zero();
  Int n = num, t = shift, m = den;
  if (m < 0) {
    n = -n;
    t = -t;
    m = -m;
  }
  Int g = gcd_any(gcd_any(n, t), m);
  n /= g;
  t /= g;
  m /= g;
  // dom = rho + q Z must map into Z: n*rho + t and n*q divisible by m
  if (!divides(m, n * dom.shift() + t) || !divides(m, n * dom.modulus())) {
    throw Error("domain outside natural domain");
  }
  return Element(std::move(n), std::move(t), std::move(m), dom);
}

Element Element::s(const Int& m) {
  require_nonzero(m);
  return Element(m, 0, 1, Projection::unit());
}

Element Element::s_star(const Int& m) {
  require_nonzero(m);
  return make(1, 0, m, Projection::of_class(0, m));
}

Element Element::u(const Int& n) { return Element(1, n, 1, Projection::unit()); }

Element Element::e(const Int& m) {
  require_nonzero(m);
  return of_projection(Projection::of_class(0, m));
}

Element Element::of_projection(const Projection& p) {
  if (p.is_zero()) return zero();
  return Element(1, 0, 1, p);
}

Element Element::of_token(const Token& t) {
  switch (t.kind) {
    case Token::Kind::S:
      return s(t.value);
    case Token::Kind::SStar:
      return s_star(t.value);
    case Token::Kind::U:
      return u(t.value);
    case Token::Kind::E:
      return e(t.value);
  }
  throw Error("unknown token");
}

Element mul(const Element& v, const Element& w) {
  if (v.is_zero() || w.is_zero()) return Element::zero();
  // On w.dom = rho + q j, w(x) = w(rho) + step*j with step = num_w*q/den_w.
  const Int& rho = w.dom().shift();
  const Int& q = w.dom().modulus();
  Int base = (w.num() * rho + w.shift()) / w.den();
  Int step = w.num() * q / w.den();
  // base + step*j in v.dom
  auto j = solve_linear_congruence(step, v.dom().shift() - base, v.dom().modulus());
  if (!j) return Element::zero();
  Projection dom = Projection::of_class(rho + q * j->value, q * j->modulus);
  return Element::make(v.num() * w.num(), v.num() * w.shift() + v.shift() * w.den(),
                       v.den() * w.den(), dom);
}

Projection source(const Element& v) { return v.dom(); }

Projection range(const Element& v) {
  if (v.is_zero()) return Projection::zero();
  Int image = (v.num() * v.dom().shift() + v.shift()) / v.den();
  Int step = v.num() * v.dom().modulus() / v.den();
  return Projection::of_class(image, step);
}

Element star(const Element& v) {
  if (v.is_zero()) return v;
  return Element::make(v.den(), -v.shift(), v.num(), range(v));
}

std::optional<Projection> as_projection(const Element& v) {
  if (v.is_zero()) return Projection::zero();
  if (v.num() == 1 && v.shift() == 0 && v.den() == 1) return v.dom();
  return std::nullopt;
}

Element normalize(const Word& w) {
  Element acc = Element::unit();
  for (const auto& t : w) {
    acc = mul(acc, Element::of_token(t));
    if (acc.is_zero()) break;
  }
  return acc;
}

Word to_word(const Element& v) {
  if (v.is_zero()) throw Error("no word form chosen for zero");
  // s_den^* u^(shift + num*rho) e_(|num| q) u^(-num*rho) s_num:
  // x -> (num x + shift)/den on {x : num (x - rho) == 0 mod |num| q} = dom.
  const Int& rho = v.dom().shift();
  const Int& q = v.dom().modulus();
  Int inner = -v.num() * rho;
  Int outer = v.shift() - inner;
  Int cut = abs(v.num()) * q;
  Word w;
  if (v.den() != 1) w.push_back(Token::s_star(v.den()));
  if (outer != 0) w.push_back(Token::u(outer));
  if (cut != 1) {
    w.push_back(Token::e(cut));
    if (inner != 0) w.push_back(Token::u(inner));
  }
  if (v.num() != 1) w.push_back(Token::s(v.num()));
  return w;
}

std::optional<Int> apply(const Element& v, const Int& x) {
  if (!v.dom().contains(x)) return std::nullopt;
  return (v.num() * x + v.shift()) / v.den();
}

}  // namespace germkit
