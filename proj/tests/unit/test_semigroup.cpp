#include <doctest.h>

#include "germkit/oracle.hpp"
#include "germkit/sampling.hpp"
#include "germkit/semigroup.hpp"

using namespace germkit;

namespace {

Projection P(int shift, int modulus) { return Projection::of_class(shift, modulus); }

Element eq1_lhs() {
  return normalize({Token::s_star(2), Token::u(1), Token::s(3), Token::s_star(5), Token::u(2), Token::s(7)});
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(normalize({Token::u(3), Token::s(2)}) == Element::make(2, 3, 1, Projection::unit()));
  CHECK(normalize({Token::s_star(2), Token::u(1), Token::s(2)}).is_zero());
  Element rhs = normalize({Token::s_star(10), Token::u(5), Token::e(15), Token::u(6), Token::s(21)});
  CHECK(eq1_lhs() == rhs);
  CHECK(normalize({}) == Element::unit());
}

TEST_CASE("mul") {
  Element a = normalize({Token::s_star(2), Token::u(1), Token::s(3)});
  Element b = normalize({Token::s_star(5), Token::u(2), Token::s(7)});
  CHECK(mul(a, b) == Element::make(21, 11, 10, P(9, 10)));
  CHECK(mul(a, Element::of_projection(source(a))) == a);
  CHECK(mul(Element::e(2), Element::of_projection(P(1, 2))).is_zero());
  CHECK(mul(Element::zero(), a).is_zero());
}

TEST_CASE("star, source and range") {
  CHECK(star(Element::u(5)) == Element::u(-5));
  CHECK(star(Element::s(2)) == Element::make(1, 0, 2, P(0, 2)));
  CHECK(star(Element::zero()).is_zero());
  CHECK(range(Element::s(2)) == P(0, 2));
  CHECK(source(Element::s(2)) == Projection::unit());
  CHECK(range(normalize({Token::u(1), Token::s(2)})) == P(1, 2));
}

TEST_CASE("as_projection") {
  CHECK(as_projection(normalize({Token::e(3)})) == P(0, 3));
  CHECK_FALSE(as_projection(Element::s(2)));
  Element v = normalize({Token::s_star(3), Token::u(2), Token::s(4)});
  CHECK(as_projection(mul(v, star(v))) == range(v));
}

TEST_CASE("to_word") {
  CHECK(normalize(to_word(Element::u(3))) == Element::u(3));
  Element v = Element::make(21, 11, 10, P(9, 10));
  CHECK(normalize(to_word(v)) == v);
  CHECK(normalize(to_word(Element::e(2))) == Element::e(2));
  CHECK_THROWS_AS(to_word(Element::zero()), Error);
}

TEST_CASE("apply") {
  CHECK(apply(Element::s(2), 3) == Int(6));
  CHECK_FALSE(apply(star(Element::s(2)), 3));
  CHECK(apply(Element::u(5), -2) == Int(3));
}

TEST_CASE("make validates and reduces") {
  CHECK(Element::make(2, 4, 2, Projection::unit()) == Element::make(1, 2, 1, Projection::unit()));
  CHECK(Element::make(-2, 0, -1, Projection::unit()) == Element::make(2, 0, 1, Projection::unit()));
  CHECK(Element::make(1, 0, 1, Projection::zero()).is_zero());
  CHECK_THROWS_AS(Element::make(1, 0, 2, Projection::unit()), Error);
  CHECK_THROWS_AS(Token::s(0), Error);
  CHECK_THROWS_AS(Token::e(0), Error);
}

TEST_CASE("inverse semigroup laws on random elements") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Element v = random_element(rng), w = random_element(rng), x = random_element(rng);
    CHECK(mul(mul(v, star(v)), v) == v);
    CHECK(star(mul(v, w)) == mul(star(w), star(v)));
    CHECK(mul(mul(v, w), x) == mul(v, mul(w, x)));
    Element e = mul(v, star(v)), f = mul(star(w), w);
    CHECK(mul(e, f) == mul(f, e));
    CHECK(as_projection(e) == range(v));
    CHECK(normalize(to_word(v)) == v);
  }
}

TEST_CASE("normalize matches the word tables") {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng);
    CHECK(oracle::agree(normalize(w), w, 120));
  }
}
