#include <doctest.h>

#include "germkit/oracle.hpp"
#include "germkit/quasilattice.hpp"

using namespace germkit;

namespace {

PElem E(int k, int m) { return PElem::make(k, m); }

}  // namespace

TEST_CASE("elements and products") {
  CHECK_THROWS_AS(E(-1, 2), Error);
  CHECK_THROWS_AS(E(1, 0), Error);
  CHECK(E(1, 2) * E(3, 5) == E(7, 10));
  CHECK(E(1, 2) * PElem::identity() == E(1, 2));
}

TEST_CASE("qleq") {
  CHECK(qleq(E(0, 2), E(4, 6)));
  CHECK_FALSE(qleq(E(1, 2), E(4, 6)));
  CHECK(qleq(E(3, 5), E(3, 5)));
  // s <= s t for every t
  for (int k = 0; k <= 5; ++k) {
    for (int m = 1; m <= 5; ++m) CHECK(qleq(E(2, 3), E(2, 3) * E(k, m)));
  }
}

TEST_CASE("upper bounds") {
  CHECK(cub_exists(E(0, 2), E(1, 3)));
  CHECK_FALSE(cub_exists(E(1, 2), E(0, 2)));
  CHECK(cub_exists(E(4, 7), E(4, 7)));
  CHECK(sigma(E(0, 2), E(1, 3)) == E(4, 6));
  CHECK_FALSE(sigma(E(1, 2), E(0, 2)));
  CHECK(sigma(E(5, 3), PElem::identity()) == E(5, 3));
}

TEST_CASE("sigma agrees with the scan") {
  for (int ks = 0; ks <= 6; ++ks) {
    for (int ms = 1; ms <= 4; ++ms) {
      for (int kt = 0; kt <= 6; ++kt) {
        for (int mt = 1; mt <= 4; ++mt) {
          CHECK(sigma(E(ks, ms), E(kt, mt)) == oracle::sigma_scan(E(ks, ms), E(kt, mt), 60));
        }
      }
    }
  }
}

TEST_CASE("covers") {
  std::vector<PElem> halves{E(0, 2), E(1, 2)};
  std::vector<PElem> gap{E(0, 2), E(1, 4)};
  std::vector<PElem> full{E(0, 2), E(1, 4), E(3, 4)};
  CHECK(covers_P(halves));
  CHECK_FALSE(covers_P(gap));
  CHECK(covers_P(full));
  std::vector<PElem> even{E(0, 4), E(2, 4)};
  std::vector<PElem> one{E(0, 4)};
  CHECK(covers_interval(even, E(0, 2)));
  CHECK(covers_interval(halves, E(0, 1)));
  CHECK_FALSE(covers_interval(one, E(0, 2)));
  CHECK_THROWS_AS(covers_interval(std::vector<PElem>{E(1, 4)}, E(0, 2)), Error);
}

TEST_CASE("projections of P_N") {
  CHECK(pelem_to_projection(E(1, 2)) == Projection::of_class(1, 2));
  CHECK(pelem_to_projection(E(0, 1)) == Projection::unit());
  CHECK(pelem_to_projection(E(5, 3)) == Projection::of_class(2, 3));
}

TEST_CASE("bridge between order and projections") {
  for (int ks = 0; ks <= 8; ++ks) {
    for (int ms = 1; ms <= 6; ++ms) {
      for (int kt = 0; kt <= 8; ++kt) {
        for (int mt = 1; mt <= 6; ++mt) {
          auto s = E(ks, ms), t = E(kt, mt);
          CHECK(cub_exists(s, t) == !orthogonal(pelem_to_projection(s), pelem_to_projection(t)));
        }
      }
    }
  }
}

TEST_CASE("upper sets") {
  CHECK(upper_set_window(E(0, 1), 2) == std::set<PElem>{E(0, 1), E(1, 1), E(2, 1), E(0, 2), E(1, 2), E(2, 2)});
  CHECK(upper_set_window(E(1, 2), 3) == std::set<PElem>{E(1, 2), E(3, 2)});
}
