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

#ifndef LMKIT_FREEGROUP_HPP
#define LMKIT_FREEGROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmkit/laurent.hpp"

namespace lmkit {

// Freely reduced word in F_n, stored as syllables (generator, exponent)
// with 1-based generator indices.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank) : rank_(rank) {}
  FreeWord(int rank, std::vector<std::pair<int, int>> syllables);

  static FreeWord generator(int rank, int i, int exponent = 1);
  static FreeWord parse(int rank, const std::string& text);

  int rank() const { return rank_; }
  const std::vector<std::pair<int, int>>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  int length() const;
  // Letters as signed generator indices, e.g. g1^2 g2^-1 -> {1, 1, -2}.
  std::vector<int> letters() const;
  static FreeWord from_letters(int rank, const std::vector<int>& letters);

  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
  friend bool operator==(const FreeWord& u, const FreeWord& v) {
    return u.rank_ == v.rank_ && u.syl_ == v.syl_;
  }
  friend bool operator<(const FreeWord& u, const FreeWord& v);
  // Same word read in a larger ambient group.
  FreeWord with_rank(int rank) const;
  std::string str() const;

 private:
  void reduce();
  int rank_ = 0;
  std::vector<std::pair<int, int>> syl_;
};

// Finite K-linear combination of words of F_n.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(int rank) : rank_(rank) {}
  GroupRingElement(const FreeWord& w, const LaurentPoly& c = 1);

  int rank() const { return rank_; }
  const std::map<FreeWord, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly augmentation() const;

  void add_term(const FreeWord& w, const LaurentPoly& c);
  GroupRingElement& operator+=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement x, const GroupRingElement& y) { return x += y; }
  friend GroupRingElement operator-(GroupRingElement x, const GroupRingElement& y);
  friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);
  friend bool operator==(const GroupRingElement& x, const GroupRingElement& y) {
    return x.rank_ == y.rank_ && x.terms_ == y.terms_;
  }
  GroupRingElement scaled(const LaurentPoly& c) const;
  std::string str() const;

 private:
  int rank_ = 0;
  std::map<FreeWord, LaurentPoly> terms_;
};

// Sum_i (g_i - 1) * coords[i]: the augmentation ideal in its free basis.
struct AugIdealElement {
  int rank = 0;
  std::vector<GroupRingElement> coords;

  // Expand back into the group ring.
  GroupRingElement expand() const;
  friend bool operator==(const AugIdealElement& x, const AugIdealElement& y) {
    return x.rank == y.rank && x.coords == y.coords;
  }
};

// Right Fox derivatives: w - 1 = sum_i (g_i - 1) d_i(w).
AugIdealElement fox_derivatives(const FreeWord& w);

class FreeGroupMap {
 public:
  FreeGroupMap() = default;
  FreeGroupMap(int source_rank, int target_rank, std::vector<FreeWord> images);
  static FreeGroupMap identity(int n);

  int source_rank() const { return source_; }
  int target_rank() const { return target_; }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int i) const { return images_.at(i - 1); }

  FreeWord apply(const FreeWord& w) const;
  GroupRingElement apply(const GroupRingElement& x) const;
  AugIdealElement apply(const AugIdealElement& x) const;

  // (*this) o other: apply other first.
  FreeGroupMap after(const FreeGroupMap& other) const;
  friend bool operator==(const FreeGroupMap& a, const FreeGroupMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }
  std::string str() const;

 private:
  int source_ = 0;
  int target_ = 0;
  std::vector<FreeWord> images_;
};

// g_i -> g_{i+k} in F_{n+k}.
FreeGroupMap include_left(int n, int k);
// g_i -> g_i in F_{n+k}.
FreeGroupMap include_right(int n, int k);

FreeGroupMap artin_action(int n, int gen);

struct WadaPair {
  FreeWord W;
  FreeWord V;
  friend bool operator==(const WadaPair& a, const WadaPair& b) { return a.W == b.W && a.V == b.V; }
};

WadaPair wada_pair(int kind, int m = 1);
FreeGroupMap wada_action(int kind, int m, int n, int gen);

enum class WadaDuality { swap, backward, inverse };
// Inverse duals are found by searching words up to max_length and verified
// by composing both ways; throws if no certificate is found.
WadaPair wada_dual(const WadaPair& p, WadaDuality kind, int max_length = 9);

// The rank-2 endomorphism g1 -> W, g2 -> V placed on slots (i, i+1) of F_n.
FreeGroupMap pair_action(const WadaPair& p, int n, int i);

}  // namespace lmkit

#endif
