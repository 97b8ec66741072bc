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

#include "genocchi/basis.hpp"
#include "testutil.hpp"

using namespace genocchi;

namespace {

Poly from_longs(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.push_back(Rat(c));
  return Poly(std::move(v));
}

const Poly kX = from_longs({0, 1});

}  // namespace

TEST_CASE("bernoulli expansion of simple polynomials") {
  Expansion e = to_basis(from_longs({1}), BasisKind::bernoulli);
  CHECK(e.start_index == 0);
  CHECK(e.coeffs == std::vector<Rat>{Rat(1)});

  e = to_basis(kX, BasisKind::bernoulli);
  CHECK(e.coeffs == std::vector<Rat>{make_rat(1, 2), Rat(1)});
  CHECK(from_basis(e) == kX);  // x = 1/2 B_0 + B_1(x)
}

TEST_CASE("euler expansion of simple polynomials") {
  Expansion e = to_basis(from_longs({1}), BasisKind::euler);
  CHECK(e.coeffs == std::vector<Rat>{Rat(1)});

  e = to_basis(kX, BasisKind::euler);
  CHECK(e.coeffs == std::vector<Rat>{make_rat(1, 2), Rat(1)});
  CHECK(from_basis(e) == kX);
}

TEST_CASE("genocchi expansion of simple polynomials") {
  Expansion e = to_basis(from_longs({1}), BasisKind::genocchi);
  CHECK(e.start_index == 1);
  CHECK(e.coeffs == std::vector<Rat>{Rat(1)});

  e = to_basis(kX, BasisKind::genocchi);
  CHECK(e.coeffs == std::vector<Rat>{make_rat(1, 2), make_rat(1, 2)});
  CHECK(from_basis(e) == kX);  // x = 1/2 G_1 + 1/2 G_2(x)
}

TEST_CASE("reconstruction from explicit coefficient lists") {
  CHECK(from_basis({BasisKind::genocchi, 1, {Rat(1)}}) == from_longs({1}));
  CHECK(from_basis({BasisKind::bernoulli, 0, {Rat(0), Rat(1)}}) ==
        Poly(std::vector<Rat>{make_rat(-1, 2), Rat(1)}));  // B_1(x) = x - 1/2
  CHECK(from_basis({BasisKind::euler, 0, {make_rat(1, 2), Rat(1)}}) == kX);
  CHECK(from_basis({BasisKind::power, 0, {Rat(3), Rat(0), Rat(2)}}) == from_longs({3, 0, 2}));
}

TEST_CASE("self-expansion is the unit vector") {
  for (long k = 0; k <= 12; ++k) {
    Expansion b = to_basis(bernoulli_poly(k), BasisKind::bernoulli);
    for (long i = 0; i <= k; ++i) CHECK(b.coeffs[static_cast<size_t>(i)] == (i == k ? 1 : 0));

    Expansion e = to_basis(euler_poly(k), BasisKind::euler);
    for (long i = 0; i <= k; ++i) CHECK(e.coeffs[static_cast<size_t>(i)] == (i == k ? 1 : 0));
  }
  for (long k = 1; k <= 13; ++k) {
    Expansion g = to_basis(genocchi_poly(k), BasisKind::genocchi);
    CHECK(g.start_index == 1);
    CHECK(static_cast<long>(g.coeffs.size()) == k);
    for (long i = 1; i <= k; ++i) CHECK(g.coeffs[static_cast<size_t>(i - 1)] == (i == k ? 1 : 0));
  }
}

TEST_CASE("round trips on random polynomials") {
  test::Rng rng(0x5eed0201);
  for (int i = 0; i < 200; ++i) {
    Poly p = rng.poly(12);
    for (BasisKind kind : {BasisKind::power, BasisKind::bernoulli, BasisKind::euler,
                           BasisKind::genocchi}) {
      Expansion e = to_basis(p, kind);
      CHECK(from_basis(e) == p);
      // re-expanding the reconstruction reproduces identical coefficients
      Expansion e2 = to_basis(from_basis(e), kind);
      CHECK(e2.coeffs == e.coeffs);
      CHECK(e2.start_index == e.start_index);
    }
  }
}

TEST_CASE("zero polynomial expands to a single zero") {
  for (BasisKind kind : {BasisKind::power, BasisKind::bernoulli, BasisKind::euler,
                         BasisKind::genocchi}) {
    Expansion e = to_basis(Poly(), kind);
    CHECK(e.coeffs == std::vector<Rat>{Rat(0)});
    CHECK(from_basis(e).is_zero());
  }
}

TEST_CASE("change-of-basis matrix matches the polynomial table") {
  TriMatrix m2 = genocchi_change_matrix(2);
  CHECK(m2.entries == std::vector<std::vector<Rat>>{
                          {Rat(1), Rat(-1), Rat(0)},
                          {Rat(0), Rat(2), Rat(-3)},
                          {Rat(0), Rat(0), Rat(3)},
                      });

  TriMatrix m0 = genocchi_change_matrix(0);
  CHECK(m0.entries == std::vector<std::vector<Rat>>{{Rat(1)}});

  // the (1,4) entry is +1; see DISCREPANCIES.md for the often-printed -1
  TriMatrix m3 = genocchi_change_matrix(3);
  CHECK(m3.entries == std::vector<std::vector<Rat>>{
                          {Rat(1), Rat(-1), Rat(0), Rat(1)},
                          {Rat(0), Rat(2), Rat(-3), Rat(0)},
                          {Rat(0), Rat(0), Rat(3), Rat(-6)},
                          {Rat(0), Rat(0), Rat(0), Rat(4)},
                      });
}

TEST_CASE("matrix is upper triangular with diagonal k") {
  for (long n = 0; n <= 20; ++n) {
    TriMatrix m = genocchi_change_matrix(n);
    for (long i = 0; i <= n; ++i) {
      CHECK(m.entries[static_cast<size_t>(i)][static_cast<size_t>(i)] == i + 1);
      for (long j = 0; j < i; ++j) {
        CHECK(m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0);
      }
    }
  }
}

TEST_CASE("back-substitution examples") {
  TriMatrix m2 = genocchi_change_matrix(2);
  CHECK(solve_upper_triangular(m2, from_longs({-1, 2})) ==
        std::vector<Rat>{Rat(0), Rat(1), Rat(0)});
  TriMatrix m0 = genocchi_change_matrix(0);
  CHECK(solve_upper_triangular(m0, from_longs({5})) == std::vector<Rat>{Rat(5)});
  CHECK_THROWS_AS(solve_upper_triangular(m0, from_longs({0, 1})), std::domain_error);
  TriMatrix degenerate = m0;
  degenerate.entries[0][0] = 0;
  CHECK_THROWS_AS(solve_upper_triangular(degenerate, from_longs({5})), std::domain_error);
}

TEST_CASE("matrix path equals derivative path") {
  test::Rng rng(0x5eed0202);
  for (int i = 0; i < 50; ++i) {
    Poly p = rng.poly(10);
    long n = std::max(p.degree(), 0l);
    std::vector<Rat> via_matrix = solve_upper_triangular(genocchi_change_matrix(n), p);
    Expansion direct = to_basis(p, BasisKind::genocchi);
    REQUIRE(via_matrix.size() >= direct.coeffs.size());
    for (size_t k = 0; k < via_matrix.size(); ++k) {
      Rat expected = k < direct.coeffs.size() ? direct.coeffs[k] : Rat(0);
      CHECK(via_matrix[k] == expected);
    }
  }
}

TEST_CASE("name parsing") {
  CHECK(parse_basis("genocchi") == BasisKind::genocchi);
  CHECK(parse_family("euler") == Family::euler);
  CHECK_THROWS_AS(parse_basis("legendre"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("fibonacci"), std::invalid_argument);
}
