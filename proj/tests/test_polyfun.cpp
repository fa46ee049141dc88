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
#include "lmkit/polyfun.hpp"

using namespace lmkit;

TEST_SUITE("polyfun") {

TEST_CASE("split stabilizations") {
  auto tym = i1_map(tym_functor(), 3);
  CHECK(tym.status == SplitStatus::injective);
  CHECK(tym.retraction * tym.inclusion == PolyMatrix::identity(3));
  CHECK(tym.projection * tym.complement == PolyMatrix::identity(1));
  auto a = i1_map(atomic_functor(2), 2);
  CHECK(a.status == SplitStatus::zero);
  auto c = i1_map(constant_functor(), 4);
  CHECK(c.inclusion == PolyMatrix::identity(1));
  CHECK(c.retraction == PolyMatrix::identity(1));
}

TEST_CASE("exact sequence dimensions") {
  for (std::string name : {"burau", "reduced-burau", "tym", "lk", "atomic2", "t1", "e2"}) {
    CAPTURE(name);
    FunctorPtr f = builtin(name), k = kappa(f), d = delta(f);
    for (int n = 0; n <= 5; ++n) {
      auto s = i1_map(f, n);
      int rank = s.status == SplitStatus::zero ? 0 : f->dim(n);
      CHECK(rank + k->dim(n) == f->dim(n));
      CHECK(d->dim(n) == f->dim(n + 1) - rank);
    }
  }
}

TEST_CASE("kappa and delta examples") {
  FunctorPtr bur = burau_functor();
  for (int n = 0; n <= 6; ++n) CHECK(kappa(bur)->dim(n) == 0);
  for (int n = 0; n <= 6; ++n) CHECK(kappa(t1_functor())->dim(n) == 0);
  FunctorPtr a2 = atomic_functor(2);
  for (int n = 0; n <= 5; ++n) CHECK(kappa(a2)->dim(n) == a2->dim(n));
  FunctorPtr dc = delta(constant_functor());
  for (int n = 0; n <= 5; ++n) CHECK(dc->dim(n) == 0);
  FunctorPtr dt = delta(tym_functor());
  for (int n = 1; n <= 5; ++n) {
    CHECK(dt->dim(n) == 1);
    for (int i = 1; i < n; ++i) CHECK(dt->gen(n, i) == PolyMatrix::identity(1));
    CHECK(dt->stab(n - 1, n) == PolyMatrix::identity(1));
  }
}

TEST_CASE("delta of reduced Burau") {
  FunctorPtr d1 = delta(reduced_burau_functor());
  auto eta = rank_one_iso(d1, t1_functor(), 6);
  REQUIRE(eta);
  CHECK(check_natural(*eta, 6).pass);
  auto eta2 = rank_one_iso(delta(d1), atomic_functor(0), 6);
  REQUIRE(eta2);
  CHECK(check_natural(*eta2, 6).pass);
  CHECK_FALSE(rank_one_iso(d1, constant_functor(), 6));
}

TEST_CASE("delta of LK shows the modified Burau blocks") {
  FunctorPtr d = delta(lk_functor());
  PolyMatrix block = PolyMatrix::from_strings({{"0", "t"}, {"1", "1-t"}});
  for (int n = 2; n <= 5; ++n) {
    CHECK(d->dim(n) == n);
    for (int i = 1; i < n; ++i) {
      PolyMatrix want = PolyMatrix::identity(n);
      want.set_block(i - 1, i - 1, block);
      CHECK(d->gen(n, i) == want);
    }
  }
}

TEST_CASE("degree table") {
  struct Row {
    std::string name;
    int degree;
    bool very_strong;
  };
  for (Row row : {Row{"constant", 0, true}, Row{"burau", 1, true}, Row{"tym", 1, true}, Row{"lk", 2, true},
                  Row{"reduced-burau", 2, false}, Row{"t1", 1, false}, Row{"atomic1", 1, false},
                  Row{"atomic3", 3, false}}) {
    CAPTURE(row.name);
    DegreeReport r = estimate_strong_degree(builtin(row.name), 8);
    REQUIRE(r.degree);
    CHECK(*r.degree == row.degree);
    CHECK(r.very_strong == row.very_strong);
  }
  DegreeReport z = estimate_strong_degree(zero_functor(), 6);
  REQUIRE(z.degree);
  CHECK(*z.degree == -1);
}

TEST_CASE("E_l never reaches a vanishing difference") {
  DegreeReport r = estimate_strong_degree(e_functor(1), 8);
  CHECK_FALSE(r.degree);
  CHECK_FALSE(r.evidence.at(1).kappa_zero);
}

TEST_CASE("degree conclusions are monotone in the range") {
  for (std::string name : {"burau", "reduced-burau", "lk"}) {
    int prev = -2;
    for (int N = 4; N <= 7; ++N) {
      DegreeReport r = estimate_strong_degree(builtin(name), N);
      REQUIRE(r.degree);
      CHECK(*r.degree >= prev);
      prev = *r.degree;
    }
  }
}

TEST_CASE("report schema") {
  auto j = estimate_strong_degree(burau_functor(), 6).to_json();
  CHECK(j["functor"] == "burau");
  CHECK(j["range"] == 6);
  CHECK(j["strong_degree_at_range"] == 1);
  CHECK(j["very_strong"] == true);
  CHECK(j["evidence"].is_array());
  CHECK(j["evidence"][0].contains("max_nonzero_dim"));
}

TEST_CASE("translation and difference commute") {
  for (std::string name : {"burau", "tym", "lk", "reduced-burau", "atomic2"}) {
    CAPTURE(name);
    CHECK(check_commutations(builtin(name), 4).pass);
  }
}

TEST_CASE("translated atomic functors") {
  CHECK(check_translated_atomic(3, 1, 6).pass);
  CHECK(check_translated_atomic(3, 2, 6).pass);
  CHECK(check_translated_atomic(4, 3, 6).pass);
}

TEST_CASE("splitting theorem") {
  LMConfig cfg = LMConfig::make("artin", "pure_braid");
  for (FunctorPtr f : {constant_functor(), burau_functor(), tym_functor(), atomic_functor(2)}) {
    CAPTURE(f->name());
    CHECK(verify_splitting_theorem(cfg, f, 4).pass);
  }
}

TEST_CASE("degree growth under LM") {
  LMConfig cfg = LMConfig::make("artin", "pure_braid");
  CHECK(verify_degree_theorems(cfg, constant_functor(), 5).pass);
  DegreeReport r = estimate_strong_degree(lm_apply(cfg, lm_apply(cfg, constant_functor())), 6);
  REQUIRE(r.degree);
  CHECK(*r.degree == 2);
  CHECK(r.very_strong);
}

}
