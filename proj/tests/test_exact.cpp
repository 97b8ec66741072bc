/*
   Copyright 2026 genocchi developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genocchi/exact.hpp"
#include "testutil.hpp"

using namespace genocchi;

TEST_CASE("make_rat normalizes") {
  CHECK(make_rat(2, 4) == make_rat(1, 2));
  CHECK(make_rat(-3, -6) == make_rat(1, 2));
  CHECK(make_rat(0, 7) == Rat(0));
  CHECK(make_rat(0, 7).get_den() == 1);
  CHECK(make_rat(3, -6) == make_rat(-1, 2));
  CHECK(make_rat(3, -6).get_den() == 2);  // denominator kept positive
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("rational inverses") {
  test::Rng rng(0x5eed0001);
  for (int i = 0; i < 200; ++i) {
    long a = rng.range(-99, 99);
    long b = rng.range(1, 40);
    CHECK(make_rat(a, b) + make_rat(-a, b) == 0);
    if (a != 0) CHECK(make_rat(a, b) * make_rat(b, a) == 1);
  }
}

TEST_CASE("binomial basics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("binomial Pascal rule up to 64") {
  for (long n = 1; n <= 64; ++n) {
    for (long k = 1; k <= n - 1; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  for (long n = 1; n <= 64; ++n) CHECK(factorial(n) == Int(n) * factorial(n - 1));
  CHECK_THROWS_AS(factorial(-2), std::domain_error);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(3) == make_rat(11, 6));
  for (long n = 1; n <= 64; ++n) CHECK(harmonic(n) - harmonic(n - 1) == make_rat(1, n));
  CHECK_THROWS_AS(harmonic(-1), std::domain_error);
}

TEST_CASE("kronecker delta") {
  CHECK(kronecker(1, 1) == 1);
  CHECK(kronecker(0, 1) == 0);
  CHECK(kronecker(-2, -2) == 1);
}

TEST_CASE("rendering") {
  CHECK(to_frac(make_rat(17, 1)) == "17/1");
  CHECK(to_plain(make_rat(17, 1)) == "17");
  CHECK(to_plain(make_rat(-1, 2)) == "-1/2");
  CHECK(to_frac(Rat(0)) == "0/1");
}

TEST_CASE("parse_rat accepts p and p/q") {
  CHECK(parse_rat("17") == 17);
  CHECK(parse_rat("-3/6") == make_rat(-1, 2));
  CHECK(parse_rat("+2/4") == make_rat(1, 2));
  CHECK(parse_rat(" 5 / 10 ") == make_rat(1, 2));
  CHECK(parse_rat("3/-6") == make_rat(-1, 2));
  CHECK_THROWS_AS(parse_rat(""), parse_error);
  CHECK_THROWS_AS(parse_rat("x"), parse_error);
  CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rat("1.5"), parse_error);
  CHECK_THROWS_WITH_AS(parse_rat("2x-1"), "bad rational token '2x-1'", parse_error);
}

TEST_CASE("round trip through text") {
  test::Rng rng(0x5eed0002);
  for (int i = 0; i < 100; ++i) {
    Rat r = rng.rat(10000, 999);
    CHECK(parse_rat(to_frac(r)) == r);
    CHECK(parse_rat(to_plain(r)) == r);
  }
}
