#include <doctest.h>

#include "germkit/groupoid.hpp"
#include "germkit/sampling.hpp"

using namespace germkit;

namespace {

TruncatedProfinite Z(int value, int level) { return TruncatedProfinite::make(value, level); }

}  // namespace

TEST_CASE("germ_new checks the domain") {
  CHECK_NOTHROW(germ_new(Z(1, 6), 1, 2, 1));
  CHECK_THROWS_WITH_AS(germ_new(Z(0, 6), 1, 2, 1), "base not in domain", Error);
  CHECK_NOTHROW(germ_new(Z(2, 6), 0, 2, 1));
  CHECK_THROWS_WITH_AS(germ_new(Z(2, 5), 0, 2, 1), "insufficient level", Error);
}

TEST_CASE("germ_of") {
  Element with = normalize({Token::s_star(2), Token::u(1), Token::e(3), Token::u(2), Token::s(5)});
  Element without = normalize({Token::s_star(2), Token::u(3), Token::s(5)});
  for (int value = 0; value < 60; ++value) {
    auto r = Z(value, 60);
    if (!char_eval(r, range(with))) continue;
    CHECK(germ_eq(germ_of(r, with), germ_of(r, without)));
  }
  auto unit = germ_of(Z(3, 12), Element::e(3));
  CHECK(unit.g().is_identity());
  CHECK_THROWS_WITH_AS(germ_of(Z(1, 12), Element::e(3)), "base not in D_s", Error);
}

TEST_CASE("source and range") {
  auto down = germ_new(Z(4, 6), 0, 2, 1);
  CHECK(source(down) == Z(2, 3));
  auto up = germ_new(Z(2, 6), 0, 1, 2);
  CHECK(source(up) == Z(4, 12));
  auto unit = germ_new(Z(5, 6), AffineRational::identity());
  CHECK(source(unit) == range(unit));
}

TEST_CASE("compose") {
  auto a = AffineRational::make(1, 3, 2), b = AffineRational::make(2, 7, 5);
  CHECK(a * b == AffineRational::make(11, 21, 10));
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Element v = random_element(rng);
    // enough level for the source and its inverse to be computable
    Int level = Int(27720) * abs(v.num());
    auto r = TruncatedProfinite::make(*germkit::apply(v, v.dom().shift()), level);
    Germ g = germ_of(r, v);
    Germ unit = germ_new(source(g), AffineRational::identity());
    CHECK(germ_eq(compose(g, unit), g));
    Germ back = compose(g, inverse(g));
    CHECK(back.g().is_identity());
    CHECK(germ_eq(back, germ_new(range(g), AffineRational::identity())));
    CHECK(germ_eq(inverse(inverse(g)), g));
  }
  auto g = germ_new(Z(4, 6), 0, 2, 1);
  CHECK_THROWS_WITH_AS(compose(g, germ_new(Z(1, 3), AffineRational::identity())), "source/range mismatch", Error);
}

TEST_CASE("inverse") {
  auto unit = germ_new(Z(1, 4), AffineRational::identity());
  CHECK(germ_eq(inverse(unit), unit));
  auto down = germ_new(Z(4, 12), 0, 2, 1);
  auto inv = inverse(down);
  CHECK(inv.base() == Z(2, 6));
  CHECK(inv.g() == AffineRational::make(0, 1, 2));
}

TEST_CASE("germ_eq") {
  CHECK_FALSE(germ_eq(germ_new(Z(0, 6), 0, 2, 1), germ_new(Z(0, 6), 0, 1, 2)));
  CHECK(germ_eq(germ_new(Z(3, 6), 1, 2, 3), germ_new(Z(3, 6), 2, 4, 6)));
  CHECK(germ_eq(germ_new(Z(3, 6), 1, 2, 3), germ_new(Z(9, 12), 1, 2, 3)));
  CHECK_FALSE(germ_eq(germ_new(Z(3, 6), 1, 2, 3), germ_new(Z(5, 6), 1, 2, 3)));
}

TEST_CASE("isotropy") {
  CHECK(isotropy_solutions(AffineRational::identity(), 8).size() == 8);
  CHECK(isotropy_solutions(AffineRational::make(0, 2, 1), 8) == std::vector<Residue>{Residue::make(0, 8)});
  CHECK(isotropy_solutions(AffineRational::make(1, 1, 3), 8).empty());
}

TEST_CASE("translation orbits") {
  CHECK(translation_orbit_covers(2, 6));
  CHECK(translation_orbit_covers(1, 1));
  CHECK(translation_orbit_covers(4, 12));
  CHECK_THROWS_WITH_AS(translation_orbit_covers(5, 12), "incompatible modulus", Error);
}
