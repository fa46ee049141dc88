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

#ifndef LMKIT_LONGMOODY_HPP
#define LMKIT_LONGMOODY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lmkit/braidcat.hpp"
#include "lmkit/freegroup.hpp"
#include "lmkit/repfun.hpp"

namespace lmkit {

// A family a_n: B_n -> Aut(F_n), given on signed Artin generators.
struct ActionFamily {
  std::string name;
  std::function<FreeGroupMap(int n, int gen)> rule;
};

// "artin", "wada:K" or "wada:1:M". Unless `verify` is false, the braid
// relations are checked for n <= 5 and a violating family is rejected.
ActionFamily action_family(const std::string& name, bool verify = true);
// a_n(sigma) conjugated by the inner automorphism of the last generator.
ActionFamily conjugated_action(const ActionFamily& a);
FreeGroupMap action_word(const ActionFamily& a, const BraidWord& w);
Report check_action_relations(const ActionFamily& a, int N);

struct LMConfig {
  ActionFamily action;
  SigmaFamily sigma;
  std::optional<LaurentPoly> pre_twist;
  std::optional<LaurentPoly> post_scale;

  // Untwisted configuration; twists are set on the fields directly.
  static LMConfig make(const std::string& action, const std::string& sigma);
  std::string str() const;
};

// The Long-Moody functor. Scalar twists make the result a functor on the
// braid groupoid only; its stabilizations are carried along unchanged.
FunctorPtr lm_apply(const LMConfig& cfg, const FunctorPtr& f);

struct CoherenceReport {
  std::vector<Report> conditions;
  bool pass() const;
  nlohmann::json to_json() const;
};

CoherenceReport check_coherence(const LMConfig& cfg, int N, int L, std::uint64_t seed = 0,
                                int certainty = 3);
CoherenceReport check_reliability(const LMConfig& cfg, int N, int L);

struct SplittingMaps {
  PolyMatrix upsilon;  // tau_2 F(n) -> tau_1 LM(F)(n)
  PolyMatrix xi;       // LM(tau_1 F)(n) -> tau_1 LM(F)(n)
};

// With `drop_braiding` the F(b_{1,1}^{-1} # id_n) factor of xi' is left
// out, which breaks the lemma (negative control).
SplittingMaps splitting_maps(const LMConfig& cfg, const FunctorPtr& f, int n, bool drop_braiding = false);
Report check_xi_lemma(const LMConfig& cfg, const FunctorPtr& f, int N, bool drop_braiding = false);
// [upsilon | xi'] intertwines tau_2 F + LM(tau_1 F) with tau_1 LM(F).
Report check_splitting_naturality(const LMConfig& cfg, const FunctorPtr& f, int N);
Report trivial_sigma_factorization(const ActionFamily& a, const FunctorPtr& f, int N);
// LM(F + G) against LM(F) + LM(G) after regrouping the block basis.
Report check_additivity(const LMConfig& cfg, const FunctorPtr& f, const FunctorPtr& g, int N);

// t^-1 LM(t X): constant functor twisted by t, result scaled by t^-1.
FunctorPtr twisted_constant_lm(const std::string& action, const std::string& sigma);
// f(s_i) = Id_{i-1} + block + Id_{n-i-1} for 2 <= n <= N, where block is
// 2x2 and given in column convention.
Report check_block_pattern(const FunctorPtr& f, const PolyMatrix& block, int N);
// r_n M(s_i) r_n^-1 = Bur_{t^2}(s_j) for the reversal matrix r_n, with M the
// transpose of t^-1 LM_1(t X)(s_i) (the row orientation of its display).
// j = i as literally claimed, or j = n - i when `reflect_index` is set.
Report check_reversal_conjugation(int N, bool reflect_index);
// eta_n = t^n L_n : t^-1 LM_1(t X)(n) -> Bur_{t^2}(n), where L_n is lower
// unitriangular with 1 - t^-2 below the diagonal. The t^n factor absorbs
// the t^-1 carried by the twisted stabilizations.
NaturalMap burau_equivalence(int range = 10);
}  // namespace lmkit

#endif
