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
#include <functional>

#include "doctest.h"
#include "lmkit/braidcat.hpp"
#include "lmkit/repfun.hpp"

using namespace lmkit;

namespace {

// All braid and far-commutation relations among the generator matrices.
bool satisfies_braid_relations(const std::function<PolyMatrix(int, int)>& gen, int n) {
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PolyMatrix a = gen(n, i), b = gen(n, j);
      if (j == i + 1 ? a * b * a != b * a * b : a * b != b * a) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("braidcat") {

TEST_CASE("word bookkeeping") {
  BraidWord w = BraidWord::parse(4, "s1 s2^-1 s3");
  CHECK(w.letters() == std::vector<int>{1, -2, 3});
  CHECK(compose(w, w.inverse()).is_identity());
  CHECK(w.shifted(2).letters() == std::vector<int>{3, -4, 5});
  CHECK(w.extended(2).strands() == 6);
  CHECK(monoidal(BraidWord::generator(2, 1), BraidWord::generator(2, 1)).letters() == std::vector<int>{1, 3});
}

TEST_CASE("braid relations of the matrix representations") {
  for (int n = 2; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(satisfies_braid_relations([](int m, int i) { return burau_matrix(m, i); }, n));
    CHECK(satisfies_braid_relations([](int m, int i) { return reduced_burau_matrix(m, i); }, n));
    CHECK(satisfies_braid_relations([](int m, int i) { return tym_functor()->gen(m, i); }, n));
    if (n <= 6) CHECK(satisfies_braid_relations([](int m, int i) { return lk_matrix(m, i); }, n));
  }
}

TEST_CASE("inverse generator matrices") {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) {
      CHECK(burau_matrix(n, i) * burau_matrix(n, -i) == PolyMatrix::identity(n));
      CHECK(lk_matrix(n, i) * lk_matrix(n, -i) == PolyMatrix::identity(n * (n - 1) / 2));
    }
}

TEST_CASE("LK basis indexing") {
  CHECK(lk_index(4, 1, 2) == 0);
  CHECK(lk_index(4, 1, 4) == 2);
  CHECK(lk_index(4, 2, 3) == 3);
  CHECK(lk_index(4, 3, 4) == 5);
}

TEST_CASE("braid equality") {
  BraidWord lhs = BraidWord::parse(4, "s1 s2 s1"), rhs = BraidWord::parse(4, "s2 s1 s2");
  CHECK(braid_equal(lhs, rhs).equal);
  CHECK(braid_equal(BraidWord::parse(4, "s1 s3"), BraidWord::parse(4, "s3 s1")).equal);
  auto c = braid_equal(BraidWord::parse(3, "s1 s2"), BraidWord::parse(3, "s2 s1"));
  CHECK_FALSE(c.equal);
  CHECK_FALSE(c.witness.empty());
}

TEST_CASE("LK separates a braid that Burau at a root of unity would not") {
  // The commutator of s1^2 and s2 s1^2 s2^-1 is a nontrivial pure braid.
  BraidWord a = BraidWord::parse(3, "s1 s1"), b = BraidWord::parse(3, "s2 s1 s1 s2^-1");
  BraidWord comm = compose(compose(a, b), compose(a.inverse(), b.inverse()));
  CHECK_FALSE(braid_equal(comm, BraidWord(3)).equal);
}

TEST_CASE("image engine is multiplicative") {
  BraidImager im(4, 2, 9);
  BraidWord u = BraidWord::parse(4, "s1 s3^-1 s2"), v = BraidWord::parse(4, "s2^-1 s1");
  CHECK(im.word(compose(u, v)) == im.word(u) * im.word(v));
  CHECK(im.word(compose(u, u.inverse())) == im.identity());
}

TEST_CASE("bracket category composition and monoidal product") {
  UBetaMorphism f = UBetaMorphism::stabilization(1, 2), g = UBetaMorphism::stabilization(2, 4);
  UBetaMorphism h = ubeta_compose(g, f);
  CHECK(h.source == 1);
  CHECK(h.target == 4);
  CHECK(ubeta_equal(h, UBetaMorphism::stabilization(1, 4)).equal);
  // [2, s1] = [2, id]: braids on the added strands are absorbed.
  UBetaMorphism absorbed{1, 3, BraidWord::parse(3, "s1")};
  CHECK(ubeta_equal(absorbed, UBetaMorphism::stabilization(1, 3)).equal);
  UBetaMorphism visible{1, 3, BraidWord::parse(3, "s2")};
  CHECK_FALSE(ubeta_equal(visible, UBetaMorphism::stabilization(1, 3)).equal);
}

TEST_CASE("the pre-braiding is not a braiding") {
  UBetaMorphism iota1 = UBetaMorphism::stabilization(0, 1);
  UBetaMorphism left = ubeta_compose(UBetaMorphism::automorphism(braiding(1, 2)),
                                     ubeta_monoidal(iota1, UBetaMorphism::identity(2)));
  UBetaMorphism right = ubeta_monoidal(UBetaMorphism::identity(2), iota1);
  auto c = ubeta_equal(left, right);
  CHECK_FALSE(c.equal);
  CHECK_FALSE(c.witness.empty());
  // The one-sided compatibility that does hold.
  UBetaMorphism pre = ubeta_compose(UBetaMorphism::automorphism(braiding(2, 1)),
                                    ubeta_monoidal(UBetaMorphism::identity(2), iota1));
  CHECK(ubeta_equal(pre, ubeta_monoidal(iota1, UBetaMorphism::identity(2))).equal);
}

TEST_CASE("pure braid sigma sends generators to A_{i,n+1}-type words") {
  SigmaFamily s = sigma_family("pure-braid");
  CHECK(s.rule(3, 1).letters() == std::vector<int>{1, 1});
  CHECK(s.rule(3, 2).letters() == std::vector<int>{-1, 2, 2, 1});
  FreeWord w = FreeWord::parse(3, "g1 g2^-1");
  CHECK(braid_equal(sigma_eval(s, w), compose(s.rule(3, 1), s.rule(3, 2).inverse())).equal);
  CHECK(sigma_eval(sigma_family("trivial"), w).is_identity());
  CHECK_THROWS(sigma_family("nope"));
}

}
