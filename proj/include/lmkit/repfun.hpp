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

#ifndef LMKIT_REPFUN_HPP
#define LMKIT_REPFUN_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "json.hpp"
#include "lmkit/braidcat.hpp"
#include "lmkit/laurent.hpp"
#include "lmkit/report.hpp"

namespace lmkit {

// Rules describing a functor U(beta) -> K-Mod on objects 0..range.
struct FunctorRules {
  std::string name;
  int range = 0;
  std::function<int(int n)> dim;
  // Matrix of a signed Artin generator; may return nullopt for negative
  // generators, in which case the inverse is computed.
  std::function<std::optional<PolyMatrix>(int n, int gen)> gen;
  // M([n2 - n, id]) for n2 > n.
  std::function<PolyMatrix(int n, int n2)> stab;
  // Optional retraction r with r * stab(n, n2) = Id.
  std::function<std::optional<PolyMatrix>(int n, int n2)> split;
  // Optional complement C of stab(n, n+1) inside F(n+1): columns such that
  // [basis of the image | C] is invertible over K.
  std::function<std::optional<PolyMatrix>(int n)> complement;
};

class BraidFunctor {
 public:
  explicit BraidFunctor(FunctorRules rules) : r_(std::move(rules)) {}

  const std::string& name() const { return r_.name; }
  int range() const { return r_.range; }
  const FunctorRules& rules() const { return r_; }

  int dim(int n) const;
  PolyMatrix gen(int n, int g) const;
  PolyMatrix stab(int n, int n2) const;
  std::optional<PolyMatrix> split(int n, int n2) const;
  std::optional<PolyMatrix> complement(int n) const;
  PolyMatrix word(const BraidWord& w) const;
  PolyMatrix eval(const UBetaMorphism& f) const;

 private:
  void check_level(int n) const;
  FunctorRules r_;
  mutable std::mutex mu_;
  mutable std::map<int, int> dims_;
  mutable std::map<std::pair<int, int>, PolyMatrix> gens_;
  mutable std::map<std::pair<int, int>, PolyMatrix> stabs_;
};

using FunctorPtr = std::shared_ptr<const BraidFunctor>;

FunctorPtr make_functor(FunctorRules rules);

// Built-in functors. `range` bounds the objects on which they are evaluated.
FunctorPtr constant_functor(int range = 16);
FunctorPtr zero_functor(int range = 16);
FunctorPtr twist_functor(const LaurentPoly& y, int range = 16);
FunctorPtr burau_functor(const LaurentPoly& t = LaurentPoly::t(), int range = 16);
FunctorPtr reduced_burau_functor(int range = 16);
FunctorPtr tym_functor(const LaurentPoly& t = LaurentPoly::t(), int range = 16);
FunctorPtr lk_functor(int range = 12);
FunctorPtr atomic_functor(int k, int range = 16);
FunctorPtr t1_functor(int range = 16);
FunctorPtr e_functor(int l, int range = 10);
// Lookup by name: constant, zero, burau, reduced-burau, tym, lk, t1,
// atomic<k>, e<l>, twist(<poly>).
FunctorPtr builtin(const std::string& name);

// The reduced Burau block for s_i in B_n, in column convention.
PolyMatrix reduced_burau_matrix(int n, int gen);

FunctorPtr direct_sum(const FunctorPtr& f, const FunctorPtr& g);
FunctorPtr tensor(const FunctorPtr& f, const FunctorPtr& g);
FunctorPtr scalar_twist(const FunctorPtr& f, const LaurentPoly& y);
// tau_k: n -> F(k + n), s -> F(id_k # s).
FunctorPtr translate(const FunctorPtr& f, int k);
// Copy of f with one generator entry replaced (negative controls).
FunctorPtr corrupt(const FunctorPtr& f, int n, int gen, int row, int col, const LaurentPoly& value);

struct NaturalMap {
  FunctorPtr source;
  FunctorPtr target;
  std::function<PolyMatrix(int n)> component;
};

// Generator words of B_n of length <= max_len with no adjacent inverse
// letters, including the empty word.
std::vector<BraidWord> enumerate_words(int n, int max_len);

Report check_functor_criterion(const FunctorPtr& f, int N, int L);
Report check_natural(const NaturalMap& eta, int N);

// Matrix of c in K[F_n] acting on F(n+1) through F o sigma_n.
class SigmaAction {
 public:
  SigmaAction(FunctorPtr f, SigmaFamily s, int n);
  PolyMatrix word(const FreeWord& w) const;
  PolyMatrix element(const GroupRingElement& c) const;

 private:
  FunctorPtr f_;
  SigmaFamily s_;
  int n_;
  int d_;
  std::vector<PolyMatrix> pos_, neg_;
};

PolyMatrix group_ring_matrix(const FunctorPtr& f, int n, const SigmaFamily& s, const GroupRingElement& c);

// {"name","n","dim","generators":{"s1":...},"stab_to":{"<n+1>":...}}
nlohmann::json functor_dump(const FunctorPtr& f, int n);
nlohmann::json matrix_json(const PolyMatrix& m);

}  // namespace lmkit

#endif
