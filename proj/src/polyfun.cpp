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

#include "lmkit/polyfun.hpp"

#include <map>
#include <mutex>

namespace lmkit {

using nlohmann::json;

// ------------------------------------------------------------ i_1 splitting

namespace {

constexpr std::uint64_t kSplitSeed = 0x51ab1e;
constexpr long kSubsetBudget = 20000;

bool is_permutation(const PolyMatrix& m) {
  if (!m.is_square()) return false;
  std::vector<bool> hit(m.rows(), false);
  for (int c = 0; c < m.cols(); ++c) {
    int found = -1;
    for (int r = 0; r < m.rows(); ++r) {
      const LaurentPoly& x = m(r, c);
      if (x.is_zero()) continue;
      if (found >= 0 || !x.is_one() || hit[r]) return false;
      found = r;
    }
    if (found < 0) return false;
    hit[found] = true;
  }
  return true;
}

// Fills the retraction/projection from a candidate complement; false when
// [S | C] is not square with unit determinant.
bool try_complement(SplitStabilization& s, const PolyMatrix& c) {
  const PolyMatrix& S = s.inclusion;
  if (c.rows() != S.rows() || c.cols() != S.rows() - S.cols()) return false;
  PolyMatrix m = hstack(S, c);
  PolyMatrix p;
  if (is_permutation(m)) {
    p = m.transpose();
  } else {
    if (!m.det().is_unit()) return false;
    p = m.inverse();
  }
  std::vector<int> top, bottom;
  for (int r = 0; r < S.cols(); ++r) top.push_back(r);
  for (int r = S.cols(); r < S.rows(); ++r) bottom.push_back(r);
  s.status = SplitStatus::injective;
  s.complement = c;
  s.retraction = p.select_rows(top);
  s.projection = p.select_rows(bottom);
  return true;
}

PolyMatrix coordinate_complement(int rows, const std::vector<int>& kept) {
  std::vector<bool> used(rows, false);
  for (int r : kept) used[r] = true;
  std::vector<int> free;
  for (int r = 0; r < rows; ++r)
    if (!used[r]) free.push_back(r);
  PolyMatrix c(rows, int(free.size()));
  for (std::size_t j = 0; j < free.size(); ++j) c(free[j], int(j)) = 1;
  return c;
}

// Rows of S whose minor is nonzero at p, chosen by elimination that prefers
// unit pivots.
std::vector<int> pivot_rows(const PolyMatrix& S, const EvalPoint& p) {
  QMatrix q = S.eval(p);
  int rows = S.rows(), cols = S.cols();
  std::vector<bool> used(rows, false);
  std::vector<int> chosen;
  for (int c = 0; c < cols; ++c) {
    int best = -1;
    for (int r = 0; r < rows; ++r) {
      if (used[r] || q(r, c) == 0) continue;
      if (best < 0 || (S(r, c).is_unit() && !S(best, c).is_unit())) best = r;
    }
    if (best < 0) return {};
    used[best] = true;
    chosen.push_back(best);
    for (int r = 0; r < rows; ++r) {
      if (r == best || q(r, c) == 0) continue;
      Rational f = q(r, c) / q(best, c);
      for (int k = 0; k < cols; ++k) q(r, k) -= f * q(best, k);
    }
  }
  return chosen;
}

bool search_complement(SplitStabilization& s, const std::vector<EvalPoint>& pts) {
  const PolyMatrix& S = s.inclusion;
  int rows = S.rows(), k = S.cols();
  auto greedy = pivot_rows(S, pts.front());
  if (!greedy.empty() && try_complement(s, coordinate_complement(rows, greedy))) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  long budget = kSubsetBudget;
  while (budget-- > 0) {
    if (S.select_rows(idx).eval(pts.front()).rank() == k &&
        try_complement(s, coordinate_complement(rows, idx)))
      return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == rows - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return false;
}

SplitStabilization compute_i1(const FunctorPtr& f, int n) {
  SplitStabilization s;
  s.inclusion = f->stab(n, n + 1);
  int d0 = s.inclusion.cols(), d1 = s.inclusion.rows();
  if (d0 == 0) {
    s.status = SplitStatus::injective;
    s.complement = s.projection = PolyMatrix::identity(d1);
    s.retraction = PolyMatrix(0, d1);
    return s;
  }
  if (s.inclusion.is_zero()) {
    s.status = SplitStatus::zero;
    s.complement = s.projection = PolyMatrix::identity(d1);
    s.note = "inclusion is zero";
    return s;
  }
  auto pts = random_points(kSplitSeed, 2);
  if (rank_probabilistic(s.inclusion, pts) < d0) {
    s.note = "inclusion is neither injective nor zero";
    return s;
  }
  bool ok = false;
  if (auto c = f->complement(n)) ok = try_complement(s, *c);
  if (!ok) ok = search_complement(s, pts);
  if (!ok) {
    s.status = SplitStatus::uncertified;
    s.note = "no unit-determinant coordinate complement found";
    return s;
  }
  if (auto r = f->split(n, n + 1); r && *r * s.inclusion == PolyMatrix::identity(d0)) s.retraction = *r;
  return s;
}

struct SplitCache {
  std::mutex mu;
  std::map<std::pair<const BraidFunctor*, int>, std::pair<std::weak_ptr<const BraidFunctor>, SplitStabilization>>
      table;
};

SplitCache& split_cache() {
  static SplitCache c;
  return c;
}

const SplitStabilization& certified(const FunctorPtr& f, int n, const SplitStabilization& s) {
  if (s.status == SplitStatus::uncertified)
    throw AlgebraError(f->name() + ": i_1 at level " + std::to_string(n) + " is uncertified (" + s.note + ")");
  return s;
}

}  // namespace

SplitStabilization i1_map(const FunctorPtr& f, int n) {
  auto& c = split_cache();
  auto key = std::make_pair(f.get(), n);
  {
    std::lock_guard<std::mutex> g(c.mu);
    auto it = c.table.find(key);
    if (it != c.table.end() && it->second.first.lock() == f) return it->second.second;
  }
  SplitStabilization s = compute_i1(f, n);
  std::lock_guard<std::mutex> g(c.mu);
  c.table[key] = {f, s};
  return s;
}

// ------------------------------------------------------------ kappa, delta

FunctorPtr kappa(const FunctorPtr& f) {
  FunctorRules r;
  r.name = "kappa(" + f->name() + ")";
  r.range = f->range() - 1;
  auto full = [f](int n) { return certified(f, n, i1_map(f, n)).status == SplitStatus::zero; };
  r.dim = [f, full](int n) { return full(n) ? f->dim(n) : 0; };
  r.gen = [f, full](int n, int g) -> std::optional<PolyMatrix> {
    return full(n) ? f->gen(n, g) : PolyMatrix(0, 0);
  };
  // Kernels of i_1 are killed by every stabilization.
  r.stab = [f, full](int n, int n2) {
    return PolyMatrix(full(n2) ? f->dim(n2) : 0, full(n) ? f->dim(n) : 0);
  };
  return make_functor(r);
}

FunctorPtr delta(const FunctorPtr& f) {
  FunctorPtr t1 = translate(f, 1);
  FunctorRules r;
  r.name = "delta(" + f->name() + ")";
  r.range = f->range() - 1;
  r.dim = [f](int n) { return certified(f, n, i1_map(f, n)).complement.cols(); };
  r.gen = [f, t1](int n, int g) -> std::optional<PolyMatrix> {
    SplitStabilization s = certified(f, n, i1_map(f, n));
    return s.projection * t1->gen(n, g) * s.complement;
  };
  r.stab = [f, t1](int n, int n2) {
    SplitStabilization a = certified(f, n, i1_map(f, n));
    SplitStabilization b = certified(f, n2, i1_map(f, n2));
    return b.projection * t1->stab(n, n2) * a.complement;
  };
  return make_functor(r);
}

// ------------------------------------------------------------ degree

std::string DegreeReport::statement() const {
  if (!error.empty()) return "partial: " + error;
  if (!degree) return "no vanishing difference found up to the requested depth";
  int k = *degree + 1;
  int top = range - k;
  return "delta_1^" + std::to_string(k) + " vanishes on objects <= " + std::to_string(top) +
         "; the degree is relative to this range";
}

json DegreeReport::to_json() const {
  json ev = json::array();
  for (const auto& e : evidence)
    ev.push_back({{"d", e.d}, {"levels", e.levels}, {"max_nonzero_dim", e.max_nonzero_dim}, {"kappa_zero", e.kappa_zero}});
  return {{"functor", functor},
          {"range", range},
          {"strong_degree_at_range", degree ? json(*degree) : json(nullptr)},
          {"very_strong", very_strong},
          {"evidence", ev},
          {"statement", statement()}};
}

DegreeReport estimate_strong_degree(const FunctorPtr& f, int N, int d_max) {
  DegreeReport rep;
  rep.functor = f->name();
  rep.range = N;
  FunctorPtr g = f;
  try {
    for (int j = 0; j <= d_max + 1 && N - j >= 0; ++j) {
      DegreeEvidence e;
      e.d = j;
      e.levels = N - j;
      for (int n = 0; n <= e.levels; ++n) e.max_nonzero_dim = std::max(e.max_nonzero_dim, g->dim(n));
      for (int n = 0; n < e.levels; ++n) {
        SplitStabilization s = certified(g, n, i1_map(g, n));
        if (s.status == SplitStatus::zero && g->dim(n) > 0) e.kappa_zero = false;
      }
      rep.evidence.push_back(e);
      if (e.max_nonzero_dim == 0) {
        rep.degree = j - 1;
        break;
      }
      g = delta(g);
    }
  } catch (const std::exception& ex) {
    rep.error = ex.what();
  }
  if (rep.degree) {
    rep.very_strong = true;
    for (const auto& e : rep.evidence)
      if (e.d <= *rep.degree && !e.kappa_zero) rep.very_strong = false;
  }
  return rep;
}

std::optional<NaturalMap> rank_one_iso(const FunctorPtr& f, const FunctorPtr& g, int N) {
  std::vector<LaurentPoly> eta(N + 1);
  for (int n = 0; n <= N; ++n) {
    int d = f->dim(n);
    if (d != g->dim(n) || d > 1) return std::nullopt;
    if (d == 0) continue;
    for (int i = 1; i < n; ++i)
      if (f->gen(n, i) != g->gen(n, i)) return std::nullopt;
    if (n > 0 && f->dim(n - 1) == 1) {
      LaurentPoly sf = f->stab(n - 1, n)(0, 0), sg = g->stab(n - 1, n)(0, 0);
      if (!sf.is_unit()) return std::nullopt;
      eta[n] = sg * eta[n - 1] * sf.inverse();
      if (!eta[n].is_unit()) return std::nullopt;
    } else {
      eta[n] = 1;
    }
  }
  return NaturalMap{f, g, [f, g, eta, N](int n) {
                      if (n > N) throw std::out_of_range("natural map defined up to " + std::to_string(N));
                      PolyMatrix m(g->dim(n), f->dim(n));
                      if (m.rows() == 1 && m.cols() == 1) m(0, 0) = eta[n];
                      return m;
                    }};
}

Report check_commutations(const FunctorPtr& f, int N) {
  Report rep;
  rep.condition = "translation-commutations";
  rep.range = {{"N", N}};
  FunctorPtr t1 = translate(f, 1);
  FunctorPtr ka = translate(kappa(f), 1), kb = kappa(t1);
  for (int n = 0; n <= N; ++n) {
    if (ka->dim(n) != kb->dim(n)) {
      rep.fail({{"relation", "kappa-dimension"}, {"n", n}});
      continue;
    }
    for (int i = 1; i < n; ++i)
      if (ka->gen(n, i) != kb->gen(n, i)) rep.fail({{"relation", "kappa-generator"}, {"n", n}, {"i", i}});
  }
  // delta_1 tau_1 F(n) and tau_1 delta_1 F(n) are quotients of F(n+2) by
  // F(s_1^{-1}) im S and im S; F(s_1) induces the isomorphism.
  FunctorPtr da = translate(delta(f), 1), db = delta(t1);
  NaturalMap phi{db, da, [f, t1](int n) {
                   SplitStabilization a = certified(f, n + 1, i1_map(f, n + 1));
                   SplitStabilization b = certified(t1, n, i1_map(t1, n));
                   PolyMatrix s1 = n + 2 >= 2 ? f->gen(n + 2, 1) : PolyMatrix::identity(f->dim(n + 2));
                   return a.projection * s1 * b.complement;
                 }};
  for (int n = 0; n <= N; ++n) {
    PolyMatrix m = phi.component(n);
    if (!m.is_square() || !m.det().is_unit()) rep.fail({{"relation", "delta-isomorphism"}, {"n", n}});
  }
  Report nat = check_natural(phi, N);
  rep.absorb(nat);
  return rep;
}

Report check_translated_atomic(int n, int k, int N) {
  Report rep;
  rep.condition = "translated-atomic";
  rep.range = {{"n", n}, {"k", k}, {"N", N}};
  FunctorPtr t = translate(atomic_functor(n, N + k + 1), k);
  FunctorPtr a = n >= k ? atomic_functor(n - k, N + 1) : zero_functor(N + 1);
  for (int m = 0; m <= N; ++m) {
    if (t->dim(m) != a->dim(m)) {
      rep.fail({{"relation", "dimension"}, {"m", m}, {"translated", t->dim(m)}, {"expected", a->dim(m)}});
      continue;
    }
    for (int i = 1; i < m; ++i)
      if (t->gen(m, i) != a->gen(m, i)) rep.fail({{"relation", "generator"}, {"m", m}, {"i", i}});
    for (int m2 = m + 1; m2 <= N; ++m2)
      if (t->stab(m, m2) != a->stab(m, m2)) rep.fail({{"relation", "stabilization"}, {"m", m}, {"m2", m2}});
  }
  return rep;
}

// ------------------------------------------------------------ theorems

Report verify_splitting_theorem(const LMConfig& cfg, const FunctorPtr& f, int N) {
  Report rep;
  rep.condition = "splitting-theorem";
  rep.range = {{"N", N}};
  auto tag = [](Report r, const std::string& part) {
    for (auto& w : r.failures) w["part"] = part;
    if (!r.witness.is_null()) r.witness["part"] = part;
    return r;
  };
  rep.absorb(tag(check_splitting_naturality(cfg, f, N), "translation-splitting"));
  rep.absorb(tag(check_xi_lemma(cfg, f, N), "xi-lemma"));

  FunctorPtr fp = cfg.pre_twist ? scalar_twist(f, *cfg.pre_twist) : f;
  LMConfig plain = cfg;
  plain.pre_twist.reset();
  FunctorPtr lm = lm_apply(cfg, f);
  try {
    // (iii) delta_1 LM(F) against tau_2 F + LM(delta_1 F).
    FunctorPtr dl = delta(lm);
    FunctorPtr t2 = translate(fp, 2);
    if (cfg.post_scale) t2 = scalar_twist(t2, *cfg.post_scale);
    FunctorPtr rhs = direct_sum(t2, lm_apply(plain, delta(fp)));
    NaturalMap psi{rhs, dl, [cfg, f, fp, lm](int n) {
                     SplittingMaps sm = splitting_maps(cfg, f, n);
                     SplitStabilization inner = certified(fp, n + 1, i1_map(fp, n + 1));
                     const PolyMatrix& c = inner.complement;
                     PolyMatrix blocks(n * c.rows(), n * c.cols());
                     for (int j = 0; j < n; ++j) blocks.set_block(j * c.rows(), j * c.cols(), c);
                     SplitStabilization outer = certified(lm, n, i1_map(lm, n));
                     return outer.projection * hstack(sm.upsilon, sm.xi * blocks);
                   }};
    for (int n = 0; n <= N; ++n) {
      PolyMatrix m = psi.component(n);
      if (!m.is_square() || !m.det().is_unit())
        rep.fail({{"part", "delta-identification"}, {"relation", "unit-determinant"}, {"n", n}});
    }
    rep.absorb(tag(check_natural(psi, N), "delta-identification"));

    // (iv) kappa_1 LM(F) against LM(kappa_1 F).
    FunctorPtr kl = kappa(lm), lk = lm_apply(plain, kappa(fp));
    for (int n = 0; n <= N; ++n) {
      if (kl->dim(n) != lk->dim(n)) {
        rep.fail({{"part", "kappa-commutation"}, {"relation", "dimension"}, {"n", n}, {"kappa_lm", kl->dim(n)},
                  {"lm_kappa", lk->dim(n)}});
        continue;
      }
      for (int i = 1; i < n; ++i)
        if (kl->gen(n, i) != lk->gen(n, i))
          rep.fail({{"part", "kappa-commutation"}, {"relation", "generator"}, {"n", n}, {"i", i}});
    }
  } catch (const std::exception& e) {
    rep.fail({{"part", "certification"}, {"error", e.what()}});
  }
  return rep;
}

Report verify_degree_theorems(const LMConfig& cfg, const FunctorPtr& f, int N, int d_max) {
  Report rep;
  rep.condition = "degree-theorems";
  rep.range = {{"N", N}, {"d_max", d_max}};
  DegreeReport base = estimate_strong_degree(f, N, d_max);
  DegreeReport lifted = estimate_strong_degree(lm_apply(cfg, f), N, d_max + 1);
  json summary = {{"functor", base.to_json()}, {"lm", lifted.to_json()}};
  if (!base.degree || !lifted.degree) {
    rep.fail({{"relation", "degree-unavailable"}, {"reports", summary}});
    return rep;
  }
  if (*lifted.degree != *base.degree + 1)
    rep.fail({{"relation", "degree-shift"}, {"degree", *base.degree}, {"lm_degree", *lifted.degree}});
  if (base.very_strong && !lifted.very_strong) rep.fail({{"relation", "very-strong-preservation"}});
  if (base.very_strong) {
    for (int k = 1; k <= 2 && N - k >= 0; ++k) {
      DegreeReport tk = estimate_strong_degree(translate(f, k), N - k, d_max);
      if (!tk.degree || *tk.degree != *base.degree || !tk.very_strong)
        rep.fail({{"relation", "translation-preservation"}, {"k", k}, {"report", tk.to_json()}});
    }
  }
  return rep;
}

}  // namespace lmkit
