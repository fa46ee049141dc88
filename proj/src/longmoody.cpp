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

#include "lmkit/longmoody.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace lmkit {

using nlohmann::json;

// ------------------------------------------------------------ actions

FreeGroupMap action_word(const ActionFamily& a, const BraidWord& w) {
  FreeGroupMap m = FreeGroupMap::identity(w.strands());
  for (int l : w.letters()) m = m.after(a.rule(w.strands(), l));
  return m;
}

Report check_action_relations(const ActionFamily& a, int N) {
  Report rep;
  rep.condition = "action-relations";
  rep.range = {{"N", N}};
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i) {
      auto x = a.rule(n, i);
      if (!(x.after(a.rule(n, -i)) == FreeGroupMap::identity(n)))
        rep.fail({{"relation", "inverse"}, {"n", n}, {"i", i}});
      if (i + 1 < n) {
        auto y = a.rule(n, i + 1);
        if (!(x.after(y).after(x) == y.after(x).after(y)))
          rep.fail({{"relation", "braid"}, {"n", n}, {"i", i}});
      }
      for (int j = i + 2; j < n; ++j) {
        auto y = a.rule(n, j);
        if (!(x.after(y) == y.after(x))) rep.fail({{"relation", "commutation"}, {"n", n}, {"i", i}, {"j", j}});
      }
    }
  return rep;
}

ActionFamily action_family(const std::string& name, bool verify) {
  ActionFamily a;
  if (name == "artin") {
    a = {"artin", [](int n, int g) { return artin_action(n, g); }};
  } else if (name.rfind("wada:", 0) == 0) {
    std::string rest = name.substr(5);
    int kind = 0, m = 1;
    auto colon = rest.find(':');
    try {
      kind = std::stoi(rest.substr(0, colon));
      if (colon != std::string::npos) m = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw AlgebraError("malformed action '" + name + "'");
    }
    if (kind < 1 || kind > 7) throw AlgebraError("invalid Wada kind " + std::to_string(kind));
    if (colon != std::string::npos && kind != 1) throw AlgebraError("only Wada kind 1 takes a parameter");
    std::string label = "wada:" + std::to_string(kind) + (kind == 1 ? ":" + std::to_string(m) : "");
    a = {label, [kind, m](int n, int g) { return wada_action(kind, m, n, g); }};
  } else {
    throw AlgebraError("unknown action '" + name + "'");
  }
  if (!verify) return a;
  Report r = check_action_relations(a, 5);
  if (!r.pass) throw AlgebraError("action " + a.name + " violates the braid relations: " + r.witness.dump());
  return a;
}

ActionFamily conjugated_action(const ActionFamily& a) {
  auto base = a.rule;
  return {"conjugated(" + a.name + ")", [base](int n, int g) {
            std::vector<FreeWord> c, ci;
            FreeWord last = FreeWord::generator(n, n);
            for (int k = 1; k <= n; ++k) {
              FreeWord gk = FreeWord::generator(n, k);
              c.push_back(last * gk * last.inverse());
              ci.push_back(last.inverse() * gk * last);
            }
            return FreeGroupMap(n, n, c).after(base(n, g)).after(FreeGroupMap(n, n, ci));
          }};
}

LMConfig LMConfig::make(const std::string& action, const std::string& sigma) {
  return {action_family(action), sigma_family(sigma), std::nullopt, std::nullopt};
}

std::string LMConfig::str() const {
  std::string s = action.name + "," + sigma.name;
  if (pre_twist || post_scale) s += "," + (pre_twist ? pre_twist->str() : std::string("1"));
  if (post_scale) s += "," + post_scale->str();
  return s;
}

// ------------------------------------------------------------ LM functor

namespace {

// Per-level F o sigma caches shared by the closures of one LM functor.
struct SigmaCache {
  FunctorPtr f;
  SigmaFamily s;
  std::mutex mu;
  std::map<int, std::shared_ptr<SigmaAction>> levels;

  std::shared_ptr<SigmaAction> at(int n) {
    {
      std::lock_guard<std::mutex> g(mu);
      auto it = levels.find(n);
      if (it != levels.end()) return it->second;
    }
    auto a = std::make_shared<SigmaAction>(f, s, n);
    std::lock_guard<std::mutex> g(mu);
    return levels.emplace(n, a).first->second;
  }
};

// F(id_1 # [n2 - n, id]).
PolyMatrix shifted_stab(const FunctorPtr& f, int n, int n2) {
  return f->eval(ubeta_monoidal(UBetaMorphism::identity(1), UBetaMorphism::stabilization(n, n2)));
}

FunctorPtr pretwisted(const LMConfig& cfg, const FunctorPtr& f) {
  return cfg.pre_twist ? scalar_twist(f, *cfg.pre_twist) : f;
}

}  // namespace

FunctorPtr lm_apply(const LMConfig& cfg, const FunctorPtr& f) {
  if (f->range() < 2) throw AlgebraError("Long-Moody functor needs eval_range >= 2");
  FunctorPtr fp = pretwisted(cfg, f);
  auto cache = std::make_shared<SigmaCache>();
  cache->f = fp;
  cache->s = cfg.sigma;
  ActionFamily act = cfg.action;
  std::optional<LaurentPoly> post = cfg.post_scale;
  if (post && !post->is_unit()) throw AlgebraError("post scale " + post->str() + " is not a unit");

  FunctorRules r;
  r.name = "lm(" + cfg.str() + ";" + f->name() + ")";
  r.range = f->range() - 1;
  r.dim = [fp](int n) { return n * fp->dim(n + 1); };
  r.gen = [fp, cache, act, post](int n, int g) -> std::optional<PolyMatrix> {
    int d = fp->dim(n + 1);
    FreeGroupMap a = act.rule(n, g);
    PolyMatrix fs = fp->gen(n + 1, g > 0 ? g + 1 : g - 1);
    auto sa = cache->at(n);
    PolyMatrix m(n * d, n * d);
    for (int j = 1; j <= n; ++j) {
      AugIdealElement fox = fox_derivatives(a.image(j));
      for (int i = 1; i <= n; ++i) {
        const GroupRingElement& c = fox.coords[i - 1];
        if (c.is_zero()) continue;
        m.set_block((i - 1) * d, (j - 1) * d, sa->element(c) * fs);
      }
    }
    if (post) m = m.scaled(g > 0 ? *post : post->inverse());
    return m;
  };
  r.stab = [fp](int n, int n2) {
    int d = fp->dim(n + 1), d2 = fp->dim(n2 + 1), k = n2 - n;
    PolyMatrix s = shifted_stab(fp, n, n2);
    PolyMatrix m(n2 * d2, n * d);
    for (int j = 0; j < n; ++j) m.set_block((j + k) * d2, j * d, s);
    return m;
  };
  r.complement = [cfg, fp, f](int n) -> std::optional<PolyMatrix> {
    // The image of i_1 LM(F) is xi'(Id (x) image of F.stab(n+1, n+2));
    // complete it by the upsilon summand and xi' of the F complement.
    auto c = fp->complement(n + 1);
    if (!c) return std::nullopt;
    SplittingMaps sm = splitting_maps(cfg, f, n);
    PolyMatrix blocks(n * c->rows(), n * c->cols());
    for (int j = 0; j < n; ++j) blocks.set_block(j * c->rows(), j * c->cols(), *c);
    return hstack(sm.upsilon, sm.xi * blocks);
  };
  return make_functor(r);
}

// ------------------------------------------------------------ coherence

bool CoherenceReport::pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

json CoherenceReport::to_json() const {
  json out = json::array();
  for (const auto& c : conditions) out.push_back(c.to_json());
  return out;
}

namespace {

struct Pair {
  BraidImage img, inv;
};

Pair operator*(const Pair& x, const Pair& y) { return {x.img * y.img, y.inv * x.inv}; }

void dfs_words(int n, int max_len, std::vector<int>& prefix,
               const std::function<bool(const std::vector<int>&)>& visit) {
  if (!visit(prefix) || int(prefix.size()) == max_len) return;
  for (int g = -(n - 1); g <= n - 1; ++g) {
    if (g == 0 || (!prefix.empty() && prefix.back() == -g)) continue;
    prefix.push_back(g);
    dfs_words(n, max_len, prefix, visit);
    prefix.pop_back();
  }
}

std::string word_str(int n, const std::vector<int>& l) { return BraidWord(n, l).str(); }

Report stability_condition(const LMConfig& cfg, int N, std::uint64_t seed, int certainty) {
  Report rep;
  rep.condition = "stability";
  rep.range = {{"N", N}, {"certainty", certainty}};
  rep.seed = seed;
  for (int n = 1; n < N; ++n) {
    BraidImager im(n + 2, certainty, seed);
    BraidWord b = braiding(1, 1).inverse().extended(n);
    for (int i = 1; i <= n; ++i) {
      BraidWord lhs = compose(b, cfg.sigma.rule(n, i).shifted(1));
      BraidWord rhs = compose(cfg.sigma.rule(n + 1, i + 1), b);
      std::string diff = im.word(lhs).difference(im.word(rhs));
      if (!diff.empty()) rep.fail({{"n", n}, {"g", "g" + std::to_string(i)}, {"reason", diff}});
    }
  }
  return rep;
}

Report compatibility_condition(const LMConfig& cfg, int N, int L) {
  Report rep;
  rep.condition = "action-compatibility";
  rep.range = {{"N", N}, {"L", L}};
  const auto& a = cfg.action;
  for (int n = 1; n <= N; ++n) {
    // a_n(sigma) for every sigma, then compared inside each F_{n'}.
    std::vector<std::pair<std::vector<int>, FreeGroupMap>> base;
    std::map<std::vector<int>, std::size_t> idx;
    std::vector<int> prefix;
    dfs_words(n, L, prefix, [&](const std::vector<int>& w) {
      FreeGroupMap m = w.empty() ? FreeGroupMap::identity(n)
                                 : base[idx.at(std::vector<int>(w.begin(), w.end() - 1))].second.after(
                                       a.rule(n, w.back()));
      idx[w] = base.size();
      base.emplace_back(w, m);
      return true;
    });
    for (int n1 = n + 1; n1 <= N; ++n1) {
      int d = n1 - n;
      FreeGroupMap inc = include_left(n, d);
      std::vector<FreeGroupMap> shifted;
      std::map<std::vector<int>, std::size_t> sidx;
      std::vector<int> p2;
      dfs_words(n, L, p2, [&](const std::vector<int>& w) {
        FreeGroupMap m = FreeGroupMap::identity(n1);
        if (!w.empty()) {
          int l = w.back();
          m = shifted[sidx.at(std::vector<int>(w.begin(), w.end() - 1))].after(
              a.rule(n1, l > 0 ? l + d : l - d));
        }
        sidx[w] = shifted.size();
        shifted.push_back(m);
        return true;
      });
      std::vector<std::pair<std::vector<int>, FreeGroupMap>> outer;
      std::map<std::vector<int>, std::size_t> oidx;
      std::vector<int> p3;
      dfs_words(d, L, p3, [&](const std::vector<int>& w) {
        FreeGroupMap m = w.empty() ? FreeGroupMap::identity(n1)
                                   : outer[oidx.at(std::vector<int>(w.begin(), w.end() - 1))].second.after(
                                         a.rule(n1, w.back()));
        oidx[w] = outer.size();
        outer.emplace_back(w, m);
        return true;
      });
      for (std::size_t s = 0; s < base.size(); ++s) {
        FreeGroupMap expected = inc.after(base[s].second);
        for (const auto& [psi, pm] : outer) {
          FreeGroupMap lhs = pm.after(shifted[s]).after(inc);
          if (!(lhs == expected))
            rep.fail({{"n", n}, {"n1", n1}, {"sigma", word_str(n, base[s].first)}, {"psi", word_str(d, psi)}});
        }
      }
    }
  }
  return rep;
}

Report semidirect_condition(const LMConfig& cfg, int N, int L, std::uint64_t seed, int certainty) {
  Report rep;
  rep.condition = "semidirect";
  rep.range = {{"N", N}, {"L", L}, {"certainty", certainty}};
  rep.seed = seed;
  for (int n = 1; n <= N; ++n) {
    BraidImager im(n + 1, certainty, seed);
    std::vector<Pair> rho0;
    for (int k = 1; k <= n; ++k) {
      BraidWord s = cfg.sigma.rule(n, k);
      rho0.push_back({im.word(s), im.word(s.inverse())});
    }
    std::map<int, FreeGroupMap> gens;
    for (int g = 1; g < n; ++g) {
      gens.emplace(g, cfg.action.rule(n, g));
      gens.emplace(-g, cfg.action.rule(n, -g));
    }
    // State along the current DFS path: rho_sigma = (F o sigma o a(sigma))
    // on generators, and the image of id_1 # sigma.
    std::vector<std::vector<Pair>> rho{rho0};
    std::vector<BraidImage> lift{im.identity()};
    // Reserved so references to the back entries survive the pushes below.
    rho.reserve(L + 1);
    lift.reserve(L + 1);
    std::vector<int> prefix;
    std::function<void()> walk = [&]() {
      const auto& r = rho.back();
      const auto& s = lift.back();
      for (int k = 1; k <= n; ++k) {
        BraidImage lhs = s * rho0[k - 1].img;
        BraidImage rhs = r[k - 1].img * s;
        std::string diff = lhs.difference(rhs);
        if (!diff.empty())
          rep.fail({{"n", n}, {"sigma", word_str(n, prefix)}, {"g", "g" + std::to_string(k)}, {"reason", diff}});
      }
      if (int(prefix.size()) == L) return;
      for (int g = -(n - 1); g <= n - 1; ++g) {
        if (g == 0 || (!prefix.empty() && prefix.back() == -g)) continue;
        const FreeGroupMap& a = gens.at(g);
        std::vector<Pair> next;
        for (int k = 1; k <= n; ++k) {
          Pair p{im.identity(), im.identity()};
          for (int x : a.image(k).letters())
            p = p * (x > 0 ? r[x - 1] : Pair{r[-x - 1].inv, r[-x - 1].img});
          next.push_back(std::move(p));
        }
        prefix.push_back(g);
        rho.push_back(std::move(next));
        lift.push_back(s * im.generator(g > 0 ? g + 1 : g - 1));
        walk();
        lift.pop_back();
        rho.pop_back();
        prefix.pop_back();
      }
    };
    walk();
  }
  return rep;
}

}  // namespace

CoherenceReport check_coherence(const LMConfig& cfg, int N, int L, std::uint64_t seed, int certainty) {
  return {{stability_condition(cfg, N, seed, certainty), compatibility_condition(cfg, N, L),
           semidirect_condition(cfg, N, L, seed, certainty)}};
}

CoherenceReport check_reliability(const LMConfig& cfg, int N, int L) {
  Report one;
  one.condition = "reliability-insertion";
  one.range = {{"N", N}};
  const auto& a = cfg.action;
  for (int n = 0; n <= N; ++n)
    for (int n1 = n; n1 <= N; ++n1) {
      int d = n1 - n;
      BraidWord b = braiding(1, d).inverse().extended(n);
      FreeWord img = action_word(a, b).apply(FreeWord::generator(1 + n1, 1 + d));
      if (!(img == FreeWord::generator(1 + n1, 1)))
        one.fail({{"n", n}, {"n1", n1}, {"image", img.str()}});
    }
  Report two;
  two.condition = "reliability-stabilizer";
  two.range = {{"N", N}, {"L", L}};
  for (int n = 2; n <= N; ++n)
    for (int n1 = n + 1; n1 <= N; ++n1) {
      int d = n1 - n;
      std::vector<FreeGroupMap> maps;
      std::map<std::vector<int>, std::size_t> idx;
      std::vector<int> prefix;
      dfs_words(n, L, prefix, [&](const std::vector<int>& w) {
        FreeGroupMap m = FreeGroupMap::identity(n1);
        if (!w.empty()) {
          int l = w.back();
          m = maps[idx.at(std::vector<int>(w.begin(), w.end() - 1))].after(a.rule(n1, l > 0 ? l + d : l - d));
        }
        idx[w] = maps.size();
        maps.push_back(m);
        for (int k = 1; k <= d; ++k)
          if (!(m.image(k) == FreeWord::generator(n1, k))) {
            two.fail({{"n", n}, {"n1", n1}, {"sigma", word_str(n, w)}, {"g", "g" + std::to_string(k)},
                      {"image", m.image(k).str()}});
            break;
          }
        return true;
      });
    }
  return {{one, two}};
}

// ------------------------------------------------------------ splitting

SplittingMaps splitting_maps(const LMConfig& cfg, const FunctorPtr& f, int n, bool drop_braiding) {
  FunctorPtr fp = pretwisted(cfg, f);
  int d = fp->dim(n + 2);
  int rows = (n + 1) * d;
  SplittingMaps out{PolyMatrix(rows, d), PolyMatrix(rows, n * d)};
  out.upsilon.set_block(0, 0, PolyMatrix::identity(d));
  PolyMatrix b = drop_braiding || n + 2 < 2 ? PolyMatrix::identity(d)
                                             : fp->word(braiding(1, 1).inverse().extended(n));
  for (int j = 0; j < n; ++j) out.xi.set_block((j + 1) * d, j * d, b);
  return out;
}

Report check_xi_lemma(const LMConfig& cfg, const FunctorPtr& f, int N, bool drop_braiding) {
  Report rep;
  rep.condition = "xi-lemma";
  rep.range = {{"N", N}};
  FunctorPtr lm = lm_apply(cfg, f);
  FunctorPtr fp = pretwisted(cfg, f);
  for (int n = 0; n <= N; ++n) {
    SplittingMaps sm = splitting_maps(cfg, f, n, drop_braiding);
    PolyMatrix s = fp->stab(n + 1, n + 2);
    PolyMatrix lmi(n * s.rows(), n * s.cols());
    for (int j = 0; j < n; ++j) lmi.set_block(j * s.rows(), j * s.cols(), s);
    if (sm.xi * lmi != lm->stab(n, n + 1)) rep.fail({{"n", n}});
  }
  return rep;
}

Report check_splitting_naturality(const LMConfig& cfg, const FunctorPtr& f, int N) {
  Report rep;
  rep.condition = "splitting-naturality";
  rep.range = {{"N", N}};
  FunctorPtr fp = pretwisted(cfg, f);
  LMConfig plain = cfg;
  plain.pre_twist.reset();
  FunctorPtr target = translate(lm_apply(cfg, f), 1);
  FunctorPtr a = translate(fp, 2);
  if (cfg.post_scale) a = scalar_twist(a, *cfg.post_scale);
  FunctorPtr b = lm_apply(plain, translate(fp, 1));
  FunctorPtr source = direct_sum(a, b);
  for (int n = 0; n <= N; ++n) {
    SplittingMaps sm = splitting_maps(cfg, f, n);
    PolyMatrix e = hstack(sm.upsilon, sm.xi);
    if (!e.det().is_unit()) rep.fail({{"relation", "unit-determinant"}, {"n", n}});
    for (int i = 1; i < n; ++i)
      if (e * source->gen(n, i) != target->gen(n, i) * e) rep.fail({{"relation", "generator"}, {"n", n}, {"i", i}});
    for (int n1 = n + 1; n1 <= N; ++n1) {
      SplittingMaps s1 = splitting_maps(cfg, f, n1);
      if (hstack(s1.upsilon, s1.xi) * source->stab(n, n1) != target->stab(n, n1) * e)
        rep.fail({{"relation", "stabilization"}, {"n", n}, {"n1", n1}});
    }
  }
  return rep;
}

Report trivial_sigma_factorization(const ActionFamily& a, const FunctorPtr& f, int N) {
  Report rep;
  rep.condition = "trivial-sigma-factorization";
  rep.range = {{"N", N}, {"action", a.name}};
  LMConfig cfg{a, sigma_family("trivial"), std::nullopt, std::nullopt};
  FunctorPtr lf = lm_apply(cfg, f);
  FunctorPtr lx = lm_apply(cfg, constant_functor(f->range()));
  FunctorPtr t1 = translate(f, 1);
  for (int n = 0; n <= N; ++n) {
    for (int i = 1; i < n; ++i)
      for (int g : {i, -i})
        if (lf->gen(n, g) != kronecker(lx->gen(n, g), t1->gen(n, g)))
          rep.fail({{"relation", "generator"}, {"n", n}, {"gen", g}});
    for (int n1 = n + 1; n1 <= N; ++n1)
      if (lf->stab(n, n1) != kronecker(lx->stab(n, n1), t1->stab(n, n1)))
        rep.fail({{"relation", "stabilization"}, {"n", n}, {"n1", n1}});
  }
  return rep;
}

namespace {

// Permutation taking the blocks (F + G)(n+1) of LM(F + G)(n) to the order
// LM(F)(n) + LM(G)(n).
PolyMatrix regroup(int n, int df, int dg) {
  int d = df + dg;
  PolyMatrix p(n * d, n * d);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < df; ++k) p(j * df + k, j * d + k) = 1;
    for (int k = 0; k < dg; ++k) p(n * df + j * dg + k, j * d + df + k) = 1;
  }
  return p;
}

}  // namespace

Report check_additivity(const LMConfig& cfg, const FunctorPtr& f, const FunctorPtr& g, int N) {
  Report rep;
  rep.condition = "additivity";
  rep.range = {{"N", N}};
  FunctorPtr whole = lm_apply(cfg, direct_sum(f, g));
  FunctorPtr parts = direct_sum(lm_apply(cfg, f), lm_apply(cfg, g));
  for (int n = 0; n <= N; ++n) {
    PolyMatrix p = regroup(n, f->dim(n + 1), g->dim(n + 1));
    for (int i = 1; i < n; ++i)
      if (p * whole->gen(n, i) != parts->gen(n, i) * p) rep.fail({{"relation", "generator"}, {"n", n}, {"i", i}});
    for (int n1 = n + 1; n1 <= N; ++n1)
      if (regroup(n1, f->dim(n1 + 1), g->dim(n1 + 1)) * whole->stab(n, n1) != parts->stab(n, n1) * p)
        rep.fail({{"relation", "stabilization"}, {"n", n}, {"n1", n1}});
  }
  return rep;
}

}  // namespace lmkit

// ------------------------------------------------------------ displays

namespace lmkit {

FunctorPtr twisted_constant_lm(const std::string& action, const std::string& sigma) {
  LMConfig cfg = LMConfig::make(action, sigma);
  cfg.pre_twist = LaurentPoly::t();
  cfg.post_scale = LaurentPoly::t(-1);
  return lm_apply(cfg, constant_functor());
}

Report check_block_pattern(const FunctorPtr& f, const PolyMatrix& block, int N) {
  Report rep;
  rep.condition = "block-pattern";
  rep.range = {{"N", N}};
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i) {
      PolyMatrix want = PolyMatrix::identity(n);
      want.set_block(i - 1, i - 1, block);
      PolyMatrix got = f->gen(n, i);
      if (got != want) rep.fail({{"n", n}, {"i", i}, {"expected", matrix_json(want)}, {"got", matrix_json(got)}});
    }
  return rep;
}

Report check_reversal_conjugation(int N, bool reflect_index) {
  Report rep;
  rep.condition = reflect_index ? "reversal-conjugation-reflected" : "reversal-conjugation";
  rep.range = {{"N", N}};
  FunctorPtr lm = twisted_constant_lm("artin", "pure_braid");
  LaurentPoly t2 = LaurentPoly::t(2);
  for (int n = 2; n <= N; ++n) {
    PolyMatrix r(n, n);
    for (int a = 0; a < n; ++a) r(a, n - 1 - a) = 1;  // r_n is its own inverse
    for (int i = 1; i < n; ++i) {
      PolyMatrix lhs = r * lm->gen(n, i).transpose() * r;
      int j = reflect_index ? n - i : i;
      PolyMatrix rhs = burau_matrix(n, j, t2);
      if (lhs != rhs)
        rep.fail({{"n", n}, {"i", i}, {"j", j}, {"conjugate", matrix_json(lhs)}, {"burau", matrix_json(rhs)}});
    }
  }
  return rep;
}

NaturalMap burau_equivalence(int range) {
  LaurentPoly below = LaurentPoly(1) - LaurentPoly::t(-2);
  NaturalMap eta;
  eta.source = twisted_constant_lm("artin", "pure_braid");
  eta.target = burau_functor(LaurentPoly::t(2), range);
  eta.component = [below](int n) {
    PolyMatrix m = PolyMatrix::identity(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < r; ++c) m(r, c) = below;
    return m.scaled(LaurentPoly::t(n));
  };
  return eta;
}

}  // namespace lmkit
