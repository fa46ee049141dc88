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
// Command-line front end: emission, checks, Long-Moody application, degree
// estimation and theorem verification, with JSON or text output.
//
// Exit status: 0 when the requested check passes, 1 when it fails (the
// witness is printed), 2 on usage or configuration errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lmkit/expr.hpp"
#include "lmkit/longmoody.hpp"
#include "lmkit/polyfun.hpp"
#include "lmkit/repfun.hpp"

using nlohmann::json;
using namespace lmkit;

namespace {

struct Options {
  std::string functor = "constant";
  std::string target;
  std::string action = "artin";
  std::string sigma = "pure-braid";
  std::string pre, post;
  std::string base = "constant";
  std::string kind, theorem;
  std::string format = "json";
  int n = 3;
  int N = 4;
  int L = 3;
  int d_max = 4;
  int iterations = 1;
  std::optional<std::uint64_t> seed;
  bool corrupt_sigma = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("LMKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("LMKIT_SEED is not a number: ") + env);
    }
  }
  return 0;
}

FunctorPtr functor_arg(const std::string& text) {
  try {
    return parse_functor(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

// A broken sigma for negative controls: g_1 goes to s_1 instead of the
// pure braid A_{1,2} = s_1^2.
SigmaFamily corrupted(SigmaFamily s) {
  auto rule = s.rule;
  s.name += "-corrupted";
  s.rule = [rule](int n, int i) {
    BraidWord w = rule(n, i);
    return i == 1 ? BraidWord::generator(n + 1, 1) : w;
  };
  return s;
}

LMConfig config_arg(const Options& o) {
  try {
    LMConfig cfg = LMConfig::make(normalize_action(o.action), o.sigma);
    if (!o.pre.empty()) cfg.pre_twist = LaurentPoly::parse(o.pre);
    if (!o.post.empty()) cfg.post_scale = LaurentPoly::parse(o.post);
    if (o.corrupt_sigma) cfg.sigma = corrupted(cfg.sigma);
    return cfg;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void print_json(const json& j, const Options& o) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // Text: one "key: value" line per top-level field, nested values compact.
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  }
}

int report_exit(const Report& r, const Options& o, const json& extra = json::object()) {
  json j = r.to_json();
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = *it;
  print_json(j, o);
  return r.pass ? 0 : 1;
}

int run_emit(const Options& o) {
  FunctorPtr f = functor_arg(o.functor);
  if (o.n < 0 || o.n > f->range()) throw UsageError("--n must lie in 0.." + std::to_string(f->range()));
  print_json(functor_dump(f, o.n), o);
  return 0;
}

int run_check(const Options& o) {
  if (o.kind == "functor") {
    FunctorPtr f = functor_arg(o.functor);
    return report_exit(check_functor_criterion(f, o.N, o.L), o);
  }
  if (o.kind == "coherence" || o.kind == "reliability") {
    LMConfig cfg = config_arg(o);
    std::uint64_t seed = resolve_seed(o);
    CoherenceReport r = o.kind == "coherence" ? check_coherence(cfg, o.N, o.L, seed) : check_reliability(cfg, o.N, o.L);
    json j = {{"config", cfg.str()},
              {"verdict", r.pass() ? "pass" : "fail"},
              {"seed", seed},
              {"conditions", r.to_json()}};
    print_json(j, o);
    return r.pass() ? 0 : 1;
  }
  if (o.kind == "natural") {
    if (o.target.empty()) throw UsageError("check natural needs --target");
    FunctorPtr f = functor_arg(o.functor), g = functor_arg(o.target);
    std::optional<NaturalMap> eta = rank_one_iso(f, g, o.N);
    std::string how = "rank-one";
    if (!eta) {
      how = "identity";
      eta = NaturalMap{f, g, [f](int n) { return PolyMatrix::identity(f->dim(n)); }};
    }
    return report_exit(check_natural(*eta, o.N), o, {{"components", how}});
  }
  throw UsageError("unknown check kind '" + o.kind + "' (functor, coherence, reliability, natural)");
}

int run_lm(const Options& o) {
  if (o.iterations < 1) throw UsageError("--iterations must be positive");
  LMConfig cfg = config_arg(o);
  FunctorPtr f = functor_arg(o.base);
  try {
    for (int k = 0; k < o.iterations; ++k) f = lm_apply(cfg, f);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (o.n < 0 || o.n > f->range()) throw UsageError("--n must lie in 0.." + std::to_string(f->range()));
  print_json(functor_dump(f, o.n), o);
  return 0;
}

int run_degree(const Options& o) {
  FunctorPtr f = functor_arg(o.functor);
  DegreeReport r = estimate_strong_degree(f, o.N, o.d_max);
  print_json(r.to_json(), o);
  return r.degree && r.error.empty() ? 0 : 1;
}

int run_verify(const Options& o) {
  const std::string& th = o.theorem;
  if (th == "burau-equivalence") {
    Report literal = check_reversal_conjugation(o.N, false);
    Report reflected = check_reversal_conjugation(o.N, true);
    Report eta = check_natural(burau_equivalence(), o.N);
    return report_exit(literal, o, {{"reflected_index", reflected.to_json()}, {"lower_triangular_equivalence", eta.to_json()}});
  }
  LMConfig cfg = config_arg(o);
  FunctorPtr f = functor_arg(o.base);
  if (th == "splitting") return report_exit(verify_splitting_theorem(cfg, f, o.N), o);
  if (th == "degree") return report_exit(verify_degree_theorems(cfg, f, o.N, o.d_max), o);
  if (th == "xi-lemma") return report_exit(check_xi_lemma(cfg, f, o.N), o);
  if (th == "factorization") return report_exit(trivial_sigma_factorization(cfg.action, f, o.N), o);
  throw UsageError("unknown theorem '" + th + "' (splitting, degree, burau-equivalence, xi-lemma, factorization)");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Long-Moody functors and polynomial functors over U(beta)"};
  app.require_subcommand(1);
  app.footer(
      "Functor expressions (--functor, --target, --base):\n"
      "  lm(ACTION, SIGMA[, PRE[, POST]]; expr)   sum(expr, expr)   tensor(expr, expr)\n"
      "  tau(K; expr)   delta(expr)   kappa(expr)\n"
      "  built-ins: constant zero burau[(t)] reduced-burau tym lk t1 atomicK eL twist(y)\n"
      "Actions: artin, wada:K, wada:1:M (or wadaK).  Sigmas: pure-braid, trivial.\n"
      "Seed: --seed, else $LMKIT_SEED, else 0.");

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_cfg = [&](CLI::App* c) {
    c->add_option("--action", o.action, "action family");
    c->add_option("--sigma", o.sigma, "sigma family");
    c->add_option("--pre", o.pre, "scalar twist applied to F before LM");
    c->add_option("--post", o.post, "scalar applied to the LM generators");
  };
  auto add_range = [&](CLI::App* c) { c->add_option("--N", o.N, "range of objects")->check(CLI::NonNegativeNumber); };
  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "seed for evaluation points"); };

  auto* emit = app.add_subcommand("emit", "dump dim, generator and stabilization matrices at one level");
  emit->add_option("--functor", o.functor, "functor expression");
  emit->add_option("--n", o.n, "object");
  add_format(emit);

  auto* check = app.add_subcommand("check", "functor criterion, coherence, reliability or naturality");
  check->add_option("kind", o.kind, "functor | coherence | reliability | natural")->required();
  check->add_option("--functor", o.functor, "functor expression");
  check->add_option("--target", o.target, "target functor for 'natural'");
  check->add_option("--L", o.L, "maximal word length")->check(CLI::NonNegativeNumber);
  check->add_flag("--corrupt-sigma", o.corrupt_sigma, "replace sigma(g_1) by s_1 (negative control)");
  add_cfg(check);
  add_range(check);
  add_seed(check);
  add_format(check);

  auto* lm = app.add_subcommand("lm", "apply the Long-Moody functor and emit one level");
  add_cfg(lm);
  lm->add_option("--base", o.base, "functor expression to start from");
  lm->add_option("--iterations", o.iterations, "number of applications");
  lm->add_option("--n", o.n, "object");
  lm->add_flag("--corrupt-sigma", o.corrupt_sigma, "replace sigma(g_1) by s_1 (negative control)");
  add_format(lm);

  auto* degree = app.add_subcommand("degree", "estimate the strong polynomial degree on a range");
  degree->add_option("--functor", o.functor, "functor expression");
  degree->add_option("--d-max", o.d_max, "deepest difference tried");
  add_range(degree);
  add_format(degree);

  auto* verify = app.add_subcommand("verify", "check a structural result on a range");
  verify->add_option("theorem", o.theorem, "splitting | degree | burau-equivalence | xi-lemma | factorization")->required();
  verify->add_option("--base", o.base, "functor expression");
  verify->add_option("--d-max", o.d_max, "deepest difference tried");
  add_cfg(verify);
  add_range(verify);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*emit) return run_emit(o);
    if (*check) return run_check(o);
    if (*lm) return run_lm(o);
    if (*degree) return run_degree(o);
    if (*verify) return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
