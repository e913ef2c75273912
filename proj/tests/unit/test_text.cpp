#include <doctest.h>

#include "germkit/sampling.hpp"
#include "germkit/text.hpp"

using namespace germkit;

TEST_CASE("parse_word") {
  CHECK(parse_word("s(2)* u(1) s(3)") == Word{Token::s_star(2), Token::u(1), Token::s(3)});
  CHECK(parse_word("u(-5)") == Word{Token::u(-5)});
  CHECK(parse_word("  e(4)   s(-3)  ") == Word{Token::e(4), Token::s(-3)});
  CHECK_THROWS_WITH_AS(parse_word("e(0)"), "parse error at position 2: zero modulus", ParseError);
}

TEST_CASE("parse errors carry positions") {
  auto position = [](std::string_view text) -> std::size_t {
    try {
      parse_word(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  CHECK(position("s(2)* u(1) x(3)") == 11);
  CHECK(position("s(2") == 3);
  CHECK(position("u()") == 2);
  CHECK(position("") == 0);
  CHECK(position("s(0)*") == 2);
  // terms may also be juxtaposed without whitespace
  CHECK(parse_word("s(2)u(1)") == Word{Token::s(2), Token::u(1)});
}

TEST_CASE("canonical forms print and parse back") {
  Element v = Element::make(21, 11, 10, Projection::of_class(9, 10));
  CHECK(to_text(v) == "elem(21,11,10,p(9,10))");
  CHECK(parse_element(to_text(v)) == v);
  CHECK(to_text(Element::zero()) == "0");
  CHECK(parse_element("0").is_zero());
  CHECK(to_text(Projection::of_class(5, 6)) == "p(5,6)");
  CHECK(parse_projection("p(-1,6)") == Projection::of_class(5, 6));
  CHECK(to_text(PElem{4, 6}) == "pn(4,6)");
  CHECK(parse_pelem("pn(4,6)") == PElem{4, 6});
  CHECK_THROWS_AS(parse_pelem("pn(-1,6)"), Error);
  auto r = parse_zhat("zhat(5,6)");
  CHECK(r == TruncatedProfinite::make(5, 6));
  CHECK(to_text(r) == "zhat(5,6)");
  auto g = parse_germ("germ(4,6; 0,2,1)");
  CHECK(to_text(g) == "germ(4,6; 0,2,1)");
  CHECK_THROWS_AS(parse_germ("germ(4,6; 0,2"), ParseError);
  CHECK(parse_int("123456789012345678901234567890") == Int("123456789012345678901234567890"));
}

TEST_CASE("word round trip") {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    Element v = random_element(rng);
    Word w = to_word(v);
    // the empty word is printed as u(0)
    if (!w.empty()) CHECK(parse_word(to_text(w)) == w);
    CHECK(normalize(parse_word(to_text(w))) == v);
  }
  CHECK(normalize(parse_word(to_text(to_word(Element::unit())))) == Element::unit());
}
