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
#include "lmkit/freegroup.hpp"

using namespace lmkit;

namespace {

FreeWord random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, rank), sign(0, 1);
  std::vector<int> l;
  int m = len(rng);
  for (int k = 0; k < m; ++k) l.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return FreeWord::from_letters(rank, l);
}

// Fox coordinates by the product rule d(uv) = d(u) v + d(v), one letter at
// a time, kept independent of fox_derivatives.
std::vector<GroupRingElement> fox_by_product_rule(const FreeWord& w) {
  int n = w.rank();
  std::vector<GroupRingElement> d(n, GroupRingElement(n));
  for (int l : w.letters()) {
    FreeWord x = FreeWord::generator(n, std::abs(l), l > 0 ? 1 : -1);
    GroupRingElement gx(x);
    for (auto& c : d) c = c * gx;
    if (l > 0)
      d[l - 1] += GroupRingElement(FreeWord(n));
    else
      d[-l - 1] += GroupRingElement(x, -1);
  }
  return d;
}

}  // namespace

TEST_SUITE("freegroup") {

TEST_CASE("free reduction") {
  FreeWord w = FreeWord::parse(3, "g1 g2 g2^-1 g1^-1 g3");
  CHECK(w == FreeWord::generator(3, 3));
  CHECK(FreeWord::parse(2, "g1^2 g1^-2").is_identity());
  CHECK(FreeWord::parse(2, "g1 g1 g2").syllables() == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    FreeWord u = random_word(rng, 3, 6);
    CHECK((u * u.inverse()).is_identity());
  }
}

TEST_CASE("Fox fundamental formula on 1000 seeded words") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> rank(1, 5);
  for (int k = 0; k < 1000; ++k) {
    FreeWord w = random_word(rng, rank(rng), 8);
    AugIdealElement d = fox_derivatives(w);
    GroupRingElement lhs = d.expand() + GroupRingElement(FreeWord(w.rank()));
    REQUIRE(lhs == GroupRingElement(w));
    REQUIRE(d.coords == fox_by_product_rule(w));
  }
}

TEST_CASE("Fox derivatives of generators and inverses") {
  auto d = fox_derivatives(FreeWord::generator(2, 1, -1));
  CHECK(d.coords[0] == GroupRingElement(FreeWord::generator(2, 1, -1), -1));
  CHECK(d.coords[1].is_zero());
}

TEST_CASE("endomorphisms compose and act on the group ring") {
  FreeGroupMap a = artin_action(3, 1), b = artin_action(3, 2);
  FreeWord w = FreeWord::parse(3, "g1 g3^-1 g2");
  CHECK(a.after(b).apply(w) == a.apply(b.apply(w)));
  CHECK(FreeGroupMap::identity(3).apply(w) == w);
  CHECK(include_left(2, 1).image(1) == FreeWord::generator(3, 2));
  CHECK(include_right(2, 1).image(2) == FreeWord::generator(3, 2));
}

TEST_CASE("Artin action is Wada kind 1 at m = -1") {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) {
      CHECK(wada_action(1, -1, n, i) == artin_action(n, i));
      CHECK(wada_action(1, -1, n, -i) == artin_action(n, -i));
    }
  CHECK_FALSE(wada_action(1, 1, 3, 1) == artin_action(3, 1));
}

TEST_CASE("braid relations for the Wada pairs") {
  // Kind 4 as printed fails s1 s2 s1 = s2 s1 s2 on F_3.
  for (int kind = 1; kind <= 7; ++kind) {
    auto s = [kind](int i) { return wada_action(kind, 1, 3, i); };
    bool braid = s(1).after(s(2)).after(s(1)) == s(2).after(s(1)).after(s(2));
    CAPTURE(kind);
    CHECK(braid == (kind != 4));
  }
  WadaPair fixed{FreeWord::generator(2, 2), FreeWord::parse(2, "g2 g1^-1 g2")};
  auto s = [&](int i) { return pair_action(fixed, 3, i); };
  CHECK(s(1).after(s(2)).after(s(1)) == s(2).after(s(1)).after(s(2)));
}

TEST_CASE("Wada inverses are two-sided") {
  for (int kind : {1, 2, 3, 5, 6, 7}) {
    CAPTURE(kind);
    for (int i = 1; i <= 3; ++i) {
      FreeGroupMap f = wada_action(kind, 1, 4, i), g = wada_action(kind, 1, 4, -i);
      CHECK(f.after(g) == FreeGroupMap::identity(4));
      CHECK(g.after(f) == FreeGroupMap::identity(4));
    }
  }
}

TEST_CASE("Wada dualities preserve the braid relation") {
  for (int kind : {1, 3, 5, 6, 7})
    for (auto dual : {WadaDuality::swap, WadaDuality::backward, WadaDuality::inverse}) {
      WadaPair p = wada_dual(wada_pair(kind), dual);
      auto s = [&](int i) { return pair_action(p, 3, i); };
      CAPTURE(kind);
      CHECK(s(1).after(s(2)).after(s(1)) == s(2).after(s(1)).after(s(2)));
    }
}

}

TEST_SUITE("freegroup") {

TEST_CASE("word parsing") {
  CHECK(FreeWord::parse(3, "g1*g2^-1") == FreeWord::parse(3, "g1 g2^-1"));
  CHECK(FreeWord::parse(2, "e").is_identity());
  CHECK_THROWS_AS(FreeWord::parse(2, "g1g2"), AlgebraError);
  CHECK_THROWS_AS(FreeWord::parse(2, "g3"), AlgebraError);
  CHECK_THROWS_AS(FreeWord::parse(2, "h1"), AlgebraError);
}

}
