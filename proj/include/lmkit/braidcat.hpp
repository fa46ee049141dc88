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

#ifndef LMKIT_BRAIDCAT_HPP
#define LMKIT_BRAIDCAT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lmkit/freegroup.hpp"
#include "lmkit/laurent.hpp"

namespace lmkit {

// Word in the Artin generators of B_n. Letters are signed generator
// indices; the word l_1 l_2 ... l_m denotes l_1 o l_2 o ... o l_m, so the
// last letter is applied first. Adjacent inverse letters cancel eagerly.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands) : strands_(strands) {}
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord generator(int strands, int gen) { return BraidWord(strands, {gen}); }
  static BraidWord parse(int strands, const std::string& text);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }

  BraidWord inverse() const;
  // id_k # (*this).
  BraidWord shifted(int k) const;
  // (*this) # id_k.
  BraidWord extended(int k) const;
  std::string str() const;
  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }

 private:
  int strands_ = 0;
  std::vector<int> letters_;
};

BraidWord compose(const BraidWord& u, const BraidWord& v);
BraidWord monoidal(const BraidWord& u, const BraidWord& v);
BraidWord braiding(int n, int m);

// [target - source, word] in Quillen's bracket category.
struct UBetaMorphism {
  int source = 0;
  int target = 0;
  BraidWord word;

  static UBetaMorphism identity(int n) { return {n, n, BraidWord(n)}; }
  static UBetaMorphism stabilization(int n, int n2) { return {n, n2, BraidWord(n2)}; }
  static UBetaMorphism automorphism(const BraidWord& w) { return {w.strands(), w.strands(), w}; }
};

UBetaMorphism ubeta_compose(const UBetaMorphism& g, const UBetaMorphism& f);
UBetaMorphism ubeta_monoidal(const UBetaMorphism& g, const UBetaMorphism& f);

// Generator matrices (column convention) of the unreduced Burau and
// Lawrence-Krammer representations; negative indices give inverses.
PolyMatrix burau_matrix(int n, int gen, const LaurentPoly& t = LaurentPoly::t());
PolyMatrix lk_matrix(int n, int gen);
// Index of v_{j,k} (1 <= j < k <= n) in the lexicographic LK basis.
int lk_index(int n, int j, int k);

PolyMatrix word_matrix(const BraidWord& w, const std::function<PolyMatrix(int, int)>& gen, int dim);

// Image of a braid under the Burau representation, kept exactly with
// integer Laurent coefficients, together with its Lawrence-Krammer images
// at seeded points reduced modulo the prime 2^61 - 1. Reduction is a ring
// map, so differing images prove the braids differ; equal images certify
// equality with the usual evaluation-point probability.
class BraidImage {
 public:
  struct IntPoly {
    int lo = 0;
    std::vector<__int128> c;  // coefficient of t^(lo + k)
    friend bool operator==(const IntPoly& x, const IntPoly& y) { return x.lo == y.lo && x.c == y.c; }
  };
  using ModMatrix = std::vector<std::uint64_t>;

  int strands() const { return n_; }
  friend BraidImage operator*(const BraidImage& x, const BraidImage& y);
  // Empty when equal; otherwise names the representation that separates.
  std::string difference(const BraidImage& other) const;
  friend bool operator==(const BraidImage& x, const BraidImage& y) { return x.difference(y).empty(); }

 private:
  friend class BraidImager;
  int n_ = 0;
  int lkdim_ = 0;
  std::vector<IntPoly> burau_;
  std::vector<ModMatrix> lk_;
  std::vector<std::string> labels_;
};

// Builds BraidImages for B_n from cached generator images.
class BraidImager {
 public:
  BraidImager(int n, int certainty = 3, std::uint64_t seed = 0);
  int strands() const { return n_; }
  BraidImage identity() const;
  BraidImage generator(int gen) const;
  BraidImage word(const BraidWord& w) const;

 private:
  int n_;
  BraidImage id_;
  std::vector<BraidImage> pos_, neg_;
};

struct BraidComparison {
  bool equal = true;
  std::string witness;  // empty when equal
};

// Decides u == v in B_n from the Burau matrices (symbolic) and the
// Lawrence-Krammer matrices at `certainty` seeded points.
BraidComparison braid_equal(const BraidWord& u, const BraidWord& v, int certainty = 3,
                            std::uint64_t seed = 0);
// Equality of [n'-n, u] and [n'-n, v] as morphisms n -> n', decided by
// comparing both evaluations under the Burau and LK functors.
BraidComparison ubeta_equal(const UBetaMorphism& f, const UBetaMorphism& g, int certainty = 3,
                            std::uint64_t seed = 0);

// A family of homomorphisms F_n -> B_{n+1}, given on generators.
struct SigmaFamily {
  std::string name;
  std::function<BraidWord(int n, int i)> rule;
};

SigmaFamily sigma_family(const std::string& name);
BraidWord sigma_eval(const SigmaFamily& s, const FreeWord& w);

}  // namespace lmkit

#endif
