#include <doctest.h>

#include <algorithm>

#include "germkit/projection.hpp"

using namespace germkit;

namespace {

Projection P(int shift, int modulus) { return Projection::of_class(shift, modulus); }

std::vector<Projection> sorted(std::vector<Projection> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("meet") {
  CHECK(meet(P(0, 2), P(0, 3)) == P(0, 6));
  CHECK(meet(P(1, 2), P(0, 2)).is_zero());
  CHECK(meet(P(1, 2), P(2, 3)) == P(5, 6));
  CHECK(meet(Projection::zero(), P(1, 2)).is_zero());
  CHECK(meet(Projection::unit(), P(1, 5)) == P(1, 5));
}

TEST_CASE("meet is commutative, associative and idempotent") {
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      for (int c = 1; c <= 4; ++c) {
        for (int r = 0; r < a; ++r) {
          Projection p = P(r, a), q = P(1, b), s = P(c - 1, c);
          CHECK(meet(p, q) == meet(q, p));
          CHECK(meet(meet(p, q), s) == meet(p, meet(q, s)));
          CHECK(meet(p, p) == p);
        }
      }
    }
  }
}

TEST_CASE("order and orthogonality") {
  CHECK(leq(P(0, 6), P(0, 2)));
  CHECK_FALSE(leq(P(1, 2), P(0, 2)));
  CHECK(leq(Projection::zero(), P(3, 7)));
  CHECK(orthogonal(P(1, 2), P(0, 2)));
  CHECK_FALSE(orthogonal(P(1, 2), P(2, 3)));
  CHECK(orthogonal(P(1, 2), Projection::zero()));
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      Projection p = P(1, m), q = P(2, n);
      CHECK(leq(p, q) == (meet(p, q) == p));
    }
  }
}

TEST_CASE("class normalization") {
  CHECK(P(-1, 3) == P(2, 3));
  CHECK(P(5, -3) == P(2, 3));
  CHECK(P(7, 1).is_unit());
  CHECK_THROWS_AS(P(1, 0), Error);
  CHECK_THROWS_AS(Projection::zero().modulus(), Error);
}

TEST_CASE("refine") {
  CHECK(sorted(refine(P(0, 2), 6)) == sorted({P(0, 6), P(2, 6), P(4, 6)}));
  CHECK(sorted(refine(Projection::unit(), 2)) == sorted({P(0, 2), P(1, 2)}));
  CHECK(refine(P(3, 5), 5) == std::vector<Projection>{P(3, 5)});
  CHECK(refine(Projection::zero(), 6).empty());
  CHECK_THROWS_AS(refine(P(0, 4), 6), Error);
}

TEST_CASE("refinement partitions the parent") {
  for (int q = 1; q <= 6; ++q) {
    for (int f = 1; f <= 5; ++f) {
      for (int r = 0; r < q; ++r) {
        auto children = refine(P(r, q), q * f);
        CHECK(children.size() == static_cast<std::size_t>(f));
        for (int x = -40; x <= 40; ++x) {
          auto hits = std::count_if(children.begin(), children.end(), [&](const auto& c) { return c.contains(x); });
          CHECK(hits == (P(r, q).contains(x) ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("conjugation by u") {
  CHECK(conj_u(P(0, 2), 1) == P(1, 2));
  CHECK(conj_u(P(4, 7), 0) == P(4, 7));
  CHECK(conj_u(P(2, 3), 4) == P(0, 3));
  CHECK(conj_u(Projection::zero(), 4).is_zero());
}

TEST_CASE("conjugation by s") {
  CHECK(conj_s(Projection::unit(), 3) == P(0, 3));
  CHECK(conj_s(P(1, 3), 2) == P(2, 6));
  CHECK(conj_s(Projection::zero(), 5).is_zero());
  CHECK(conj_s_star(P(0, 3), 2) == P(0, 3));
  CHECK(conj_s_star(P(1, 2), 2).is_zero());
  CHECK(conj_s_star(P(2, 6), 2) == P(1, 3));
  CHECK_THROWS_AS(conj_s(P(1, 3), 0), Error);
}

TEST_CASE("pulling back a pushed class returns it") {
  for (int m = -7; m <= 7; ++m) {
    if (m == 0) continue;
    for (int q = 1; q <= 7; ++q) {
      for (int r = 0; r < q; ++r) CHECK(conj_s_star(conj_s(P(r, q), m), m) == P(r, q));
    }
  }
}

TEST_CASE("covers and tight suprema") {
  std::vector<Projection> halves{P(0, 2), P(1, 2)};
  std::vector<Projection> gap{P(0, 2), P(1, 4)};
  std::vector<Projection> quarters{P(0, 4), P(2, 4)};
  CHECK(is_cover(halves, Projection::unit()));
  CHECK_FALSE(is_cover(gap, Projection::unit()));
  CHECK(is_cover(quarters, P(0, 2)));
  CHECK(is_tight_sup(halves, Projection::unit()));
  CHECK_FALSE(is_tight_sup(gap, Projection::unit()));
  CHECK(is_tight_sup(quarters, P(0, 2)));
  std::vector<Projection> self{P(3, 5)};
  CHECK(is_cover(self, P(3, 5)));
  CHECK(is_tight_sup(self, P(3, 5)));
  std::vector<Projection> outside{P(1, 4)};
  CHECK_THROWS_AS(is_cover(outside, P(0, 2)), Error);
  CHECK_THROWS_AS(is_tight_sup(outside, P(0, 2)), Error);
}
