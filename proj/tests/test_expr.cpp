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
#include "doctest.h"
#include "lmkit/expr.hpp"
#include "lmkit/polyfun.hpp"

using namespace lmkit;

TEST_SUITE("expr") {

TEST_CASE("built-in names pass through") {
  CHECK(parse_functor("burau")->name() == "burau");
  CHECK(parse_functor(" lk ")->dim(4) == 6);
  CHECK(parse_functor("burau(t^2)")->gen(2, 1) == burau_matrix(2, 1, LaurentPoly::t(2)));
}

TEST_CASE("compound expressions") {
  FunctorPtr f = parse_functor("lm(artin, pure-braid, t, t^-1; constant)");
  CHECK(f->gen(2, 1) == PolyMatrix::from_strings({{"0", "t^2"}, {"1", "1-t^2"}}));
  CHECK(parse_functor("lm(artin,pure-braid; lm(artin,pure-braid; constant))")->dim(3) == 12);
  CHECK(parse_functor("sum(burau, tym)")->dim(3) == 6);
  CHECK(parse_functor("tensor(burau, sum(constant, constant))")->dim(3) == 6);
  CHECK(parse_functor("tau(2; burau)")->dim(1) == 3);
  CHECK(parse_functor("delta(tym)")->dim(3) == 1);
  CHECK(parse_functor("kappa(atomic2)")->dim(2) == 1);
  CHECK(parse_functor("lm(wada2, trivial; burau)")->name() == "lm(wada:2,trivial;burau)");
}

TEST_CASE("malformed expressions") {
  CHECK_THROWS_AS(parse_functor(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_functor("sum(burau)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_functor("lm(artin; burau)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_functor("tau(x; burau)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_functor("sum(burau, (tym)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_functor("nosuch"), std::invalid_argument);
}

TEST_CASE("short Wada spelling") {
  CHECK(normalize_action("wada2") == "wada:2");
  CHECK(normalize_action("wada1:-1") == "wada:1:-1");
  CHECK(normalize_action("artin") == "artin");
}

}
