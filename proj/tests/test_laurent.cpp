/* Copyright (C) 2026 The lmkit Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include <random>

#include "doctest.h"
#include "lmkit/laurent.hpp"

using namespace lmkit;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int terms = 4) {
  std::uniform_int_distribution<int> e(-3, 3), c(-5, 5);
  LaurentPoly p;
  for (int k = 0; k < terms; ++k) p += LaurentPoly::monomial(Rational(c(rng), 1 + (k % 3)), e(rng), e(rng));
  return p;
}

PolyMatrix random_matrix(std::mt19937_64& rng, int r, int c) {
  PolyMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = random_poly(rng, 2);
  return m;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("evaluation is a ring map") {
  std::mt19937_64 rng(11);
  auto pts = random_points(3, 4);
  for (int k = 0; k < 50; ++k) {
    auto a = random_poly(rng), b = random_poly(rng);
    for (const auto& p : pts) {
      CHECK((a * b).eval(p) == a.eval(p) * b.eval(p));
      CHECK((a + b).eval(p) == a.eval(p) + b.eval(p));
    }
  }
}

TEST_CASE("random points are seeded and avoid +-1") {
  auto p = random_points(42, 5), q = random_points(42, 5);
  REQUIRE(p.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(p[i].t == q[i].t);
    CHECK(p[i].q == q[i].q);
    CHECK(abs(p[i].t) != 1);
    CHECK(p[i].t != 0);
  }
}

TEST_CASE("parse and print round trip") {
  for (std::string s : {"1 - t", "t^-2", "3/2*t^2*q^-1 + 1", "0", "-t + q"}) {
    LaurentPoly p = LaurentPoly::parse(s);
    CHECK(LaurentPoly::parse(p.str()) == p);
  }
  CHECK(LaurentPoly::parse("-t^2 + 1") == LaurentPoly(1) - LaurentPoly::t(2));
  CHECK(LaurentPoly::parse("2/4*t") == LaurentPoly::monomial(Rational(1, 2), 1, 0));
  CHECK_THROWS(LaurentPoly::parse("1 + * t"));
}

TEST_CASE("units, inverses and exact division") {
  LaurentPoly u = LaurentPoly::monomial(Rational(-2, 3), 2, -1);
  CHECK(u.is_unit());
  CHECK(u * u.inverse() == LaurentPoly(1));
  LaurentPoly a = LaurentPoly::parse("1 - t^2"), b = LaurentPoly::parse("1 + t");
  CHECK(divexact(a, b) == LaurentPoly::parse("1 - t"));
  CHECK_THROWS_AS(divexact(b, a), AlgebraError);
  CHECK(LaurentPoly::t().substitute_power(2) == LaurentPoly::t(2));
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    auto a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("inverse of a unimodular matrix") {
  // Lower unitriangular times a Burau block: determinant is a unit.
  PolyMatrix l = PolyMatrix::from_strings({{"1", "0", "0"}, {"1-t", "1", "0"}, {"t^2", "q", "1"}});
  PolyMatrix b = PolyMatrix::from_strings({{"1-t", "t", "0"}, {"1", "0", "0"}, {"0", "0", "1"}});
  PolyMatrix m = l * b;
  CHECK(m.det().is_unit());
  CHECK(m * m.inverse() == PolyMatrix::identity(3));
  CHECK(m.inverse() * m == PolyMatrix::identity(3));
}

TEST_CASE("block helpers") {
  PolyMatrix a = PolyMatrix::from_strings({{"1", "t"}});
  PolyMatrix b = PolyMatrix::from_strings({{"q"}});
  PolyMatrix s = direct_sum(a.transpose(), b);
  CHECK(s.rows() == 3);
  CHECK(s.cols() == 2);
  CHECK(s(2, 1) == LaurentPoly::q());
  CHECK(kronecker(PolyMatrix::identity(2), b) == PolyMatrix::identity(2).scaled(LaurentPoly::q()));
  CHECK(hstack(a, b).cols() == 3);
  CHECK(vstack(a, a).rows() == 2);
  CHECK(s.block(2, 1, 1, 1) == b);
}

TEST_CASE("probabilistic rank") {
  PolyMatrix m = PolyMatrix::from_strings({{"1", "t"}, {"t", "t^2"}, {"q", "q*t"}});
  CHECK(rank_probabilistic(m, random_points(0, 3)) == 1);
  CHECK(rank_probabilistic(PolyMatrix::identity(4), random_points(0, 1)) == 4);
}

}
