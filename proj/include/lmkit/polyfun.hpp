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

#ifndef LMKIT_POLYFUN_HPP
#define LMKIT_POLYFUN_HPP

#include <optional>
#include <string>
#include <vector>

#include "lmkit/longmoody.hpp"
#include "lmkit/repfun.hpp"

namespace lmkit {

enum class SplitStatus {
  injective,   // certified split injection with a unit-determinant complement
  zero,        // the inclusion is the zero map
  uncertified  // neither; kappa and delta are unavailable at this level
};

// i_1(F)_n = F([1, id]) : F(n) -> F(n+1) in split form. For an injective
// inclusion S with complement C, [S | C]^{-1} = [retraction ; projection].
struct SplitStabilization {
  SplitStatus status = SplitStatus::uncertified;
  PolyMatrix inclusion;
  PolyMatrix retraction;
  PolyMatrix complement;
  PolyMatrix projection;
  std::string note;
};

SplitStabilization i1_map(const FunctorPtr& f, int n);

// Kernel and cokernel functors of i_1. Both throw AlgebraError when a
// level they need is uncertified.
FunctorPtr kappa(const FunctorPtr& f);
FunctorPtr delta(const FunctorPtr& f);

struct DegreeEvidence {
  int d = 0;
  int levels = 0;  // delta^d F inspected on objects 0..levels
  int max_nonzero_dim = 0;
  bool kappa_zero = true;
};

struct DegreeReport {
  std::string functor;
  int range = 0;
  std::optional<int> degree;  // unset when d_max was exhausted
  bool very_strong = false;
  std::vector<DegreeEvidence> evidence;
  std::string error;  // set when an uncertified level stopped the run

  std::string statement() const;
  nlohmann::json to_json() const;
};

// delta^j F is inspected on objects 0..N-j, so F is evaluated up to N.
DegreeReport estimate_strong_degree(const FunctorPtr& f, int N, int d_max = 4);

// A natural isomorphism between functors of dimension <= 1 with equal
// generator scalars, propagated along the stabilizations from eta = 1 at
// the first nonzero level. Returns nullopt if the supports or generator
// actions differ or a stabilization scalar is not a unit.
std::optional<NaturalMap> rank_one_iso(const FunctorPtr& f, const FunctorPtr& g, int N);

// tau_1 delta_1 F against delta_1 tau_1 F, and the same for kappa_1.
Report check_commutations(const FunctorPtr& f, int N);
// Whether tau_k(A_n) coincides with A_{n-k} on objects 0..N.
Report check_translated_atomic(int n, int k, int N);

Report verify_splitting_theorem(const LMConfig& cfg, const FunctorPtr& f, int N);
Report verify_degree_theorems(const LMConfig& cfg, const FunctorPtr& f, int N, int d_max = 4);

}  // namespace lmkit

#endif
