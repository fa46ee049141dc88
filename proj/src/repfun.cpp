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

#include "lmkit/repfun.hpp"

#include <cctype>
#include <stdexcept>

namespace lmkit {

using nlohmann::json;

// ------------------------------------------------------------ BraidFunctor

void BraidFunctor::check_level(int n) const {
  if (n < 0 || n > r_.range)
    throw std::out_of_range(r_.name + ": object " + std::to_string(n) + " outside range 0.." +
                            std::to_string(r_.range));
}

int BraidFunctor::dim(int n) const {
  check_level(n);
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = dims_.find(n);
    if (it != dims_.end()) return it->second;
  }
  int d = r_.dim(n);
  std::lock_guard<std::mutex> g(mu_);
  dims_.emplace(n, d);
  return d;
}

PolyMatrix BraidFunctor::gen(int n, int g) const {
  check_level(n);
  if (g == 0 || std::abs(g) > n - 1)
    throw std::out_of_range(r_.name + ": no generator s" + std::to_string(g) + " in B_" +
                            std::to_string(n));
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = gens_.find({n, g});
    if (it != gens_.end()) return it->second;
  }
  std::optional<PolyMatrix> m = r_.gen(n, g);
  PolyMatrix out = m ? *m : gen(n, -g).inverse();
  std::lock_guard<std::mutex> lk(mu_);
  gens_.emplace(std::make_pair(n, g), out);
  return out;
}

PolyMatrix BraidFunctor::stab(int n, int n2) const {
  check_level(n);
  check_level(n2);
  if (n2 < n) throw std::out_of_range(r_.name + ": no stabilization to a smaller object");
  if (n2 == n) return PolyMatrix::identity(dim(n));
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = stabs_.find({n, n2});
    if (it != stabs_.end()) return it->second;
  }
  PolyMatrix out = r_.stab(n, n2);
  std::lock_guard<std::mutex> lk(mu_);
  stabs_.emplace(std::make_pair(n, n2), out);
  return out;
}

std::optional<PolyMatrix> BraidFunctor::split(int n, int n2) const {
  check_level(n2);
  if (n2 == n) return PolyMatrix::identity(dim(n));
  if (!r_.split) return std::nullopt;
  return r_.split(n, n2);
}

std::optional<PolyMatrix> BraidFunctor::complement(int n) const {
  check_level(n + 1);
  if (!r_.complement) return std::nullopt;
  return r_.complement(n);
}

PolyMatrix BraidFunctor::word(const BraidWord& w) const {
  int n = w.strands();
  return word_matrix(w, [this](int k, int g) { return gen(k, g); }, dim(n));
}

PolyMatrix BraidFunctor::eval(const UBetaMorphism& f) const {
  if (f.word.strands() != f.target) throw AlgebraError("malformed morphism");
  return word(f.word) * stab(f.source, f.target);
}

FunctorPtr make_functor(FunctorRules rules) { return std::make_shared<BraidFunctor>(std::move(rules)); }

// ---------------------------------------------------------------- built-ins

namespace {

// Embedding of K^a onto the last a coordinates of K^b.
PolyMatrix last_coordinates(int b, int a) {
  PolyMatrix m(b, a);
  for (int i = 0; i < a; ++i) m(b - a + i, i) = 1;
  return m;
}

PolyMatrix first_coordinates(int b, int c) {
  PolyMatrix m(b, c);
  for (int i = 0; i < c; ++i) m(i, i) = 1;
  return m;
}

// Rules shared by functors whose stabilizations are iota + id.
FunctorRules coordinate_rules(std::string name, int range, std::function<int(int)> dim) {
  FunctorRules r;
  r.name = std::move(name);
  r.range = range;
  r.dim = dim;
  r.stab = [dim](int n, int n2) { return last_coordinates(dim(n2), dim(n)); };
  r.split = [dim](int n, int n2) -> std::optional<PolyMatrix> {
    return last_coordinates(dim(n2), dim(n)).transpose();
  };
  r.complement = [dim](int n) -> std::optional<PolyMatrix> {
    return first_coordinates(dim(n + 1), dim(n + 1) - dim(n));
  };
  return r;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

FunctorPtr constant_functor(int range) {
  FunctorRules r = coordinate_rules("constant", range, [](int) { return 1; });
  r.gen = [](int, int) -> std::optional<PolyMatrix> { return PolyMatrix::identity(1); };
  return make_functor(r);
}

FunctorPtr zero_functor(int range) {
  FunctorRules r = coordinate_rules("zero", range, [](int) { return 0; });
  r.gen = [](int, int) -> std::optional<PolyMatrix> { return PolyMatrix(0, 0); };
  return make_functor(r);
}

FunctorPtr twist_functor(const LaurentPoly& y, int range) {
  auto f = scalar_twist(constant_functor(range), y);
  FunctorRules r = f->rules();
  r.name = "twist(" + y.str() + ")";
  return make_functor(r);
}

FunctorPtr burau_functor(const LaurentPoly& t, int range) {
  std::string name = t == LaurentPoly::t() ? "burau" : "burau(" + t.str() + ")";
  FunctorRules r = coordinate_rules(name, range, [](int n) { return n; });
  r.gen = [t](int n, int g) -> std::optional<PolyMatrix> { return burau_matrix(n, g, t); };
  return make_functor(r);
}

PolyMatrix reduced_burau_matrix(int n, int gen) {
  LaurentPoly t = LaurentPoly::t();
  if (gen < 1 || gen > n - 1) throw AlgebraError("Artin generator index out of range");
  PolyMatrix m = PolyMatrix::identity(n - 1);
  // Blocks are the transposes of the usual row-convention display.
  if (n == 2) {
    m(0, 0) = -t;
  } else if (gen == 1) {
    m.set_block(0, 0, PolyMatrix::from_rows({{-t, 1}, {0, 1}}));
  } else if (gen == n - 1) {
    m.set_block(n - 3, n - 3, PolyMatrix::from_rows({{1, 0}, {t, -t}}));
  } else {
    m.set_block(gen - 2, gen - 2, PolyMatrix::from_rows({{1, 0, 0}, {t, -t, 1}, {0, 0, 1}}));
  }
  return m;
}

FunctorPtr reduced_burau_functor(int range) {
  FunctorRules r = coordinate_rules("reduced-burau", range, [](int n) { return n > 0 ? n - 1 : 0; });
  r.gen = [](int n, int g) -> std::optional<PolyMatrix> {
    if (g < 0) return std::nullopt;
    return reduced_burau_matrix(n, g);
  };
  return make_functor(r);
}

FunctorPtr tym_functor(const LaurentPoly& t, int range) {
  std::string name = t == LaurentPoly::t() ? "tym" : "tym(" + t.str() + ")";
  FunctorRules r = coordinate_rules(name, range, [](int n) { return n; });
  r.gen = [t](int n, int g) -> std::optional<PolyMatrix> {
    int i = std::abs(g);
    PolyMatrix m = PolyMatrix::identity(n);
    if (g > 0)
      m.set_block(i - 1, i - 1, PolyMatrix::from_rows({{0, t}, {1, 0}}));
    else
      m.set_block(i - 1, i - 1, PolyMatrix::from_rows({{0, 1}, {t.inverse(), 0}}));
    return m;
  };
  return make_functor(r);
}

FunctorPtr lk_functor(int range) {
  FunctorRules r = coordinate_rules("lk", range, [](int n) { return n * (n - 1) / 2; });
  r.gen = [](int n, int g) -> std::optional<PolyMatrix> { return lk_matrix(n, g); };
  return make_functor(r);
}

FunctorPtr atomic_functor(int k, int range) {
  if (k < 0) throw AlgebraError("atomic functor index must be non-negative");
  FunctorRules r;
  r.name = "atomic" + std::to_string(k);
  r.range = range;
  r.dim = [k](int n) { return n == k ? 1 : 0; };
  r.gen = [k](int n, int) -> std::optional<PolyMatrix> { return PolyMatrix::identity(n == k ? 1 : 0); };
  r.stab = [k](int n, int n2) { return PolyMatrix(n2 == k ? 1 : 0, n == k ? 1 : 0); };
  r.complement = [k](int n) -> std::optional<PolyMatrix> {
    return PolyMatrix::identity(n + 1 == k ? 1 : 0);
  };
  // Zero stabilizations admit no retraction unless the source is zero.
  r.split = [k](int n, int n2) -> std::optional<PolyMatrix> {
    if (n == k) return std::nullopt;
    return PolyMatrix(0, n2 == k ? 1 : 0);
  };
  return make_functor(r);
}

FunctorPtr t1_functor(int range) {
  FunctorRules r = coordinate_rules("t1", range, [](int n) { return n > 0 ? 1 : 0; });
  r.gen = [](int, int) -> std::optional<PolyMatrix> { return PolyMatrix::identity(1); };
  return make_functor(r);
}

FunctorPtr e_functor(int l, int range) {
  if (l < 0) throw AlgebraError("E_l needs l >= 0");
  FunctorRules r = coordinate_rules("e" + std::to_string(l), range, [l](int n) { return ipow(n, l); });
  r.gen = [l](int n, int) -> std::optional<PolyMatrix> { return PolyMatrix::identity(ipow(n, l)); };
  return make_functor(r);
}

FunctorPtr builtin(const std::string& spec) {
  std::string name = spec, arg;
  auto open = spec.find('(');
  if (open != std::string::npos) {
    if (spec.back() != ')') throw AlgebraError("malformed functor name '" + spec + "'");
    name = spec.substr(0, open);
    arg = spec.substr(open + 1, spec.size() - open - 2);
  }
  auto int_suffix = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = name.size() > prefix.size() ? name.substr(prefix.size()) : arg;
    if (rest.empty()) return std::nullopt;
    for (char c : rest)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return std::stoi(rest);
  };
  LaurentPoly t = arg.empty() ? LaurentPoly::t() : LaurentPoly::parse(arg);
  if (name == "constant") return constant_functor();
  if (name == "zero") return zero_functor();
  if (name == "burau" || name == "bur") return burau_functor(t);
  if (name == "reduced-burau" || name == "redbur") return reduced_burau_functor();
  if (name == "tym") return tym_functor(t);
  if (name == "lk") return lk_functor();
  if (name == "t1") return t1_functor();
  if (name == "twist") {
    if (arg.empty()) throw AlgebraError("twist needs a unit scalar, e.g. twist(t)");
    if (!t.is_unit()) throw AlgebraError("twist scalar " + t.str() + " is not a unit");
    return twist_functor(t);
  }
  if (auto k = int_suffix("atomic")) return atomic_functor(*k);
  if (auto l = int_suffix("e")) return e_functor(*l);
  throw AlgebraError("unknown functor '" + spec + "'");
}

// -------------------------------------------------------------- combinators

FunctorPtr direct_sum(const FunctorPtr& f, const FunctorPtr& g) {
  FunctorRules r;
  r.name = "sum(" + f->name() + "," + g->name() + ")";
  r.range = std::min(f->range(), g->range());
  r.dim = [f, g](int n) { return f->dim(n) + g->dim(n); };
  r.gen = [f, g](int n, int i) -> std::optional<PolyMatrix> {
    return lmkit::direct_sum(f->gen(n, i), g->gen(n, i));
  };
  r.stab = [f, g](int n, int n2) { return lmkit::direct_sum(f->stab(n, n2), g->stab(n, n2)); };
  r.split = [f, g](int n, int n2) -> std::optional<PolyMatrix> {
    auto a = f->split(n, n2), b = g->split(n, n2);
    if (!a || !b) return std::nullopt;
    return lmkit::direct_sum(*a, *b);
  };
  r.complement = [f, g](int n) -> std::optional<PolyMatrix> {
    auto a = f->complement(n), b = g->complement(n);
    if (!a || !b) return std::nullopt;
    return lmkit::direct_sum(*a, *b);
  };
  return make_functor(r);
}

FunctorPtr tensor(const FunctorPtr& f, const FunctorPtr& g) {
  FunctorRules r;
  r.name = "tensor(" + f->name() + "," + g->name() + ")";
  r.range = std::min(f->range(), g->range());
  r.dim = [f, g](int n) { return f->dim(n) * g->dim(n); };
  r.gen = [f, g](int n, int i) -> std::optional<PolyMatrix> {
    return kronecker(f->gen(n, i), g->gen(n, i));
  };
  r.stab = [f, g](int n, int n2) { return kronecker(f->stab(n, n2), g->stab(n, n2)); };
  r.split = [f, g](int n, int n2) -> std::optional<PolyMatrix> {
    auto a = f->split(n, n2), b = g->split(n, n2);
    if (!a || !b) return std::nullopt;
    return kronecker(*a, *b);
  };
  return make_functor(r);
}

FunctorPtr scalar_twist(const FunctorPtr& f, const LaurentPoly& y) {
  if (!y.is_unit()) throw AlgebraError("twist scalar " + y.str() + " is not a unit");
  FunctorRules r = f->rules();
  r.name = "twist(" + y.str() + "," + f->name() + ")";
  LaurentPoly yi = y.inverse();
  r.gen = [f, y, yi](int n, int i) -> std::optional<PolyMatrix> {
    return f->gen(n, i).scaled(i > 0 ? y : yi);
  };
  r.stab = [f](int n, int n2) { return f->stab(n, n2); };
  r.split = [f](int n, int n2) { return f->split(n, n2); };
  r.complement = [f](int n) { return f->complement(n); };
  return make_functor(r);
}

FunctorPtr translate(const FunctorPtr& f, int k) {
  if (k < 0) throw AlgebraError("translation needs k >= 0");
  if (k == 0) return f;
  FunctorRules r;
  r.name = "tau" + std::to_string(k) + "(" + f->name() + ")";
  r.range = f->range() - k;
  r.dim = [f, k](int n) { return f->dim(n + k); };
  r.gen = [f, k](int n, int i) -> std::optional<PolyMatrix> {
    return f->gen(n + k, i > 0 ? i + k : i - k);
  };
  // id_k # [n2 - n, id] = [n2 - n, w] with w an automorphism of k + n2.
  auto shift_word = [k](int n, int n2) {
    return ubeta_monoidal(UBetaMorphism::identity(k), UBetaMorphism::stabilization(n, n2)).word;
  };
  r.stab = [f, k, shift_word](int n, int n2) {
    return f->word(shift_word(n, n2)) * f->stab(n + k, n2 + k);
  };
  r.split = [f, k, shift_word](int n, int n2) -> std::optional<PolyMatrix> {
    auto s = f->split(n + k, n2 + k);
    if (!s) return std::nullopt;
    return *s * f->word(shift_word(n, n2).inverse());
  };
  r.complement = [f, k, shift_word](int n) -> std::optional<PolyMatrix> {
    auto c = f->complement(n + k);
    if (!c) return std::nullopt;
    return f->word(shift_word(n, n + 1)) * *c;
  };
  return make_functor(r);
}

FunctorPtr corrupt(const FunctorPtr& f, int n, int gen, int row, int col, const LaurentPoly& value) {
  FunctorRules r = f->rules();
  r.name = "corrupt(" + f->name() + ")";
  r.gen = [f, n, gen, row, col, value](int m, int i) -> std::optional<PolyMatrix> {
    PolyMatrix out = f->gen(m, i);
    if (m == n && i == gen) out(row, col) = value;
    return out;
  };
  return make_functor(r);
}

// ------------------------------------------------------------------ checks

std::vector<BraidWord> enumerate_words(int n, int max_len) {
  std::vector<BraidWord> out{BraidWord(n)};
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= max_len && n >= 2; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int g = -(n - 1); g <= n - 1; ++g) {
        if (g == 0 || (!w.empty() && w.back() == -g)) continue;
        auto v = w;
        v.push_back(g);
        out.emplace_back(n, v);
        next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  return out;
}

namespace {

json mat(const PolyMatrix& m) { return matrix_json(m); }

// Word matrices in prefix order so each costs one multiplication.
std::vector<PolyMatrix> word_table(const FunctorPtr& f, const std::vector<BraidWord>& words,
                                   const std::function<BraidWord(const BraidWord&)>& place) {
  std::vector<PolyMatrix> out;
  out.reserve(words.size());
  std::map<std::vector<int>, std::size_t> index;
  for (const auto& w : words) {
    BraidWord p = place(w);
    const auto& l = w.letters();
    if (l.empty()) {
      out.push_back(PolyMatrix::identity(f->dim(p.strands())));
    } else {
      std::vector<int> prefix(l.begin(), l.end() - 1);
      BraidWord last = place(BraidWord(w.strands(), {l.back()}));
      out.push_back(out[index.at(prefix)] * f->word(last));
    }
    index[l] = out.size() - 1;
  }
  return out;
}

}  // namespace

Report check_functor_criterion(const FunctorPtr& f, int N, int L) {
  Report rep;
  rep.condition = "functor-criterion";
  rep.range = {{"N", N}, {"L", L}};
  if (N > f->range()) {
    rep.fail({{"error", "N exceeds eval_range " + std::to_string(f->range())}});
    return rep;
  }
  for (int n = 2; n <= N; ++n) {
    for (int i = 1; i < n; ++i) {
      if (f->gen(n, i) * f->gen(n, -i) != PolyMatrix::identity(f->dim(n)))
        rep.fail({{"relation", "inverse"}, {"n", n}, {"i", i}});
      if (i + 1 < n) {
        auto a = f->gen(n, i), b = f->gen(n, i + 1);
        if (a * b * a != b * a * b)
          rep.fail({{"relation", "braid"}, {"n", n}, {"i", i}, {"lhs", mat(a * b * a)},
                    {"rhs", mat(b * a * b)}});
      }
      for (int j = i + 2; j < n; ++j) {
        auto a = f->gen(n, i), b = f->gen(n, j);
        if (a * b != b * a) rep.fail({{"relation", "commutation"}, {"n", n}, {"i", i}, {"j", j}});
      }
    }
  }
  for (int n = 0; n <= N; ++n)
    for (int n1 = n; n1 <= N; ++n1) {
      PolyMatrix s = f->stab(n, n1);
      if (s.rows() != f->dim(n1) || s.cols() != f->dim(n))
        rep.fail({{"relation", "stab-shape"}, {"n", n}, {"n1", n1}});
      if (auto r = f->split(n, n1); r && *r * s != PolyMatrix::identity(f->dim(n)))
        rep.fail({{"relation", "split"}, {"n", n}, {"n1", n1}});
      for (int n2 = n1; n2 <= N; ++n2)
        if (f->stab(n1, n2) * s != f->stab(n, n2))
          rep.fail({{"relation", "stab-composition"}, {"n", n}, {"n1", n1}, {"n2", n2}});
    }
  for (int n = 0; n <= N; ++n) {
    auto sig = enumerate_words(n, L);
    auto base = word_table(f, sig, [](const BraidWord& w) { return w; });
    for (int n1 = n + 1; n1 <= N; ++n1) {
      int d = n1 - n;
      auto psi = enumerate_words(d, L);
      auto right = word_table(f, sig, [d](const BraidWord& w) { return w.shifted(d); });
      auto left = word_table(f, psi, [n](const BraidWord& w) { return w.extended(n); });
      PolyMatrix s = f->stab(n, n1);
      for (std::size_t a = 0; a < sig.size(); ++a) {
        PolyMatrix lhs = s * base[a];
        PolyMatrix rs = right[a] * s;
        for (std::size_t b = 0; b < psi.size(); ++b)
          if (left[b] * rs != lhs)
            rep.fail({{"relation", "intertwining"}, {"n", n}, {"n1", n1},
                      {"sigma", sig[a].str()}, {"psi", psi[b].str()}});
      }
    }
  }
  return rep;
}

Report check_natural(const NaturalMap& eta, int N) {
  Report rep;
  rep.condition = "natural";
  rep.range = {{"N", N}};
  const auto& F = eta.source;
  const auto& G = eta.target;
  for (int n = 0; n <= N; ++n) {
    PolyMatrix e = eta.component(n);
    if (e.rows() != G->dim(n) || e.cols() != F->dim(n)) {
      rep.fail({{"relation", "shape"}, {"n", n}});
      continue;
    }
    for (int i = 1; i < n; ++i)
      if (e * F->gen(n, i) != G->gen(n, i) * e)
        rep.fail({{"relation", "generator"}, {"n", n}, {"i", i}, {"component", mat(e)}});
    for (int n1 = n + 1; n1 <= N; ++n1)
      if (eta.component(n1) * F->stab(n, n1) != G->stab(n, n1) * e)
        rep.fail({{"relation", "stabilization"}, {"n", n}, {"n1", n1}});
  }
  return rep;
}

// ------------------------------------------------------------- group ring

SigmaAction::SigmaAction(FunctorPtr f, SigmaFamily s, int n)
    : f_(std::move(f)), s_(std::move(s)), n_(n), d_(f_->dim(n + 1)) {
  for (int i = 1; i <= n; ++i) {
    BraidWord w = s_.rule(n, i);
    pos_.push_back(f_->word(w));
    neg_.push_back(f_->word(w.inverse()));
  }
}

PolyMatrix SigmaAction::word(const FreeWord& w) const {
  if (w.rank() != n_) throw AlgebraError("word rank does not match the level");
  PolyMatrix m = PolyMatrix::identity(d_);
  for (int l : w.letters()) m = m * (l > 0 ? pos_[l - 1] : neg_[-l - 1]);
  return m;
}

PolyMatrix SigmaAction::element(const GroupRingElement& c) const {
  PolyMatrix m(d_, d_);
  for (const auto& [w, lambda] : c.terms()) m = m + word(w).scaled(lambda);
  return m;
}

PolyMatrix group_ring_matrix(const FunctorPtr& f, int n, const SigmaFamily& s, const GroupRingElement& c) {
  return SigmaAction(f, s, n).element(c);
}

// ------------------------------------------------------------------- JSON

json matrix_json(const PolyMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.to_strings()) rows.push_back(r);
  return rows;
}

json functor_dump(const FunctorPtr& f, int n) {
  json gens = json::object();
  for (int i = 1; i < n; ++i) gens["s" + std::to_string(i)] = matrix_json(f->gen(n, i));
  json stab = json::object();
  if (n + 1 <= f->range()) stab[std::to_string(n + 1)] = matrix_json(f->stab(n, n + 1));
  return {{"name", f->name()}, {"n", n}, {"dim", f->dim(n)}, {"generators", gens}, {"stab_to", stab}};
}

}  // namespace lmkit
