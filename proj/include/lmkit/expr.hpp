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
#ifndef LMKIT_EXPR_HPP
#define LMKIT_EXPR_HPP

#include <string>

#include "lmkit/longmoody.hpp"
#include "lmkit/repfun.hpp"

namespace lmkit {

// Functor expressions, prefix form:
//
//   expr := lm(ACTION, SIGMA[, PRE[, POST]]; expr)
//         | sum(expr, expr) | tensor(expr, expr)
//         | tau(K; expr) | delta(expr) | kappa(expr)
//         | BUILTIN
//
// ACTION is artin, wada:K, wada:1:M or the short form wadaK. BUILTIN is
// any name accepted by builtin(), e.g. burau, burau(t^2), atomic2, e3.
// Throws std::invalid_argument on malformed input.
FunctorPtr parse_functor(const std::string& text);

// Accepts the short Wada spelling (wada2, wada1:-1) besides action_family
// names.
std::string normalize_action(const std::string& name);

}  // namespace lmkit

#endif
