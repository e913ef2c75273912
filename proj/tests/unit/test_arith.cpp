#include <doctest.h>

#include <random>

#include "germkit/arith.hpp"

using namespace germkit;

TEST_CASE("gcd and lcm of small values") {
  CHECK(gcd(4, 6) == 2);
  CHECK(gcd(-3, 3) == 3);
  CHECK(lcm(4, 6) == 12);
  CHECK(lcm(2, 3) == 6);
  for (int n = -9; n <= 9; ++n) {
    if (n == 0) continue;
    CHECK(gcd(1, n) == 1);
    CHECK(lcm(n, 1) == (n < 0 ? -n : n));
  }
  CHECK_THROWS_AS(gcd(0, 3), Error);
  CHECK_THROWS_AS(lcm(3, 0), Error);
}

TEST_CASE("gcd and lcm beyond 64 bits") {
  Int big = Int(1) << 100;
  CHECK(gcd(big * 3, big * 5) == big);
  CHECK(lcm(big * 3, big * 5) == big * 15);
}

TEST_CASE("extended gcd gives a Bezout identity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-500, 500);
  for (int i = 0; i < 500; ++i) {
    Int a = d(rng), b = d(rng);
    if (a == 0 && b == 0) continue;
    auto e = extended_gcd(a, b);
    CHECK(e.g == gcd_any(a, b));
    CHECK(a * e.x + b * e.y == e.g);
  }
}

TEST_CASE("crt meet examples") {
  auto five = crt_meet(Residue::make(1, 2), Residue::make(2, 3));
  REQUIRE(five);
  CHECK(*five == Residue::make(5, 6));
  CHECK_FALSE(crt_meet(Residue::make(0, 2), Residue::make(1, 2)));
  for (int r = -5; r <= 5; ++r) {
    CHECK(crt_meet(Residue::make(0, 1), Residue::make(r, 7)) == Residue::make(r, 7));
  }
  CHECK_THROWS_AS(Residue::make(1, 0), Error);
}

TEST_CASE("crt meet agrees with a scan") {
  for (int m1 = 1; m1 <= 12; ++m1) {
    for (int m2 = 1; m2 <= 12; ++m2) {
      for (int r1 = 0; r1 < m1; ++r1) {
        for (int r2 = 0; r2 < m2; ++r2) {
          auto meet = crt_meet(Residue::make(r1, m1), Residue::make(r2, m2));
          int found = -1;
          for (int x = 0; x < m1 * m2 && found < 0; ++x) {
            if (x % m1 == r1 && x % m2 == r2) found = x;
          }
          REQUIRE(meet.has_value() == (found >= 0));
          if (meet) {
            CHECK(meet->modulus == lcm(m1, m2));
            CHECK(meet->value == found);
          }
        }
      }
    }
  }
}

TEST_CASE("linear congruences") {
  // 2x == 2 mod 6 has solutions x == 1 mod 3
  auto s = solve_linear_congruence(2, 2, 6);
  REQUIRE(s);
  CHECK(*s == Residue::make(1, 3));
  CHECK_FALSE(solve_linear_congruence(2, 1, 8));
  for (int a = -6; a <= 6; ++a) {
    for (int b = -6; b <= 6; ++b) {
      auto sol = solve_linear_congruence(a, b, 9);
      bool any = false;
      for (int x = 0; x < 9; ++x) any = any || floor_mod(Int(a * x - b), 9) == 0;
      REQUIRE(sol.has_value() == any);
      if (sol) CHECK(floor_mod(a * sol->value - b, 9) == 0);
    }
  }
}
