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

#include "lmkit/braidcat.hpp"

#include <array>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

namespace lmkit {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands) {
  for (int l : letters) {
    if (l == 0 || std::abs(l) > strands - 1)
      throw AlgebraError("braid letter " + std::to_string(l) + " out of range for B_" +
                         std::to_string(strands));
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

BraidWord BraidWord::parse(int strands, const std::string& text) {
  std::vector<int> letters;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok == "e") continue;
    if (tok.size() < 2 || tok[0] != 's') throw AlgebraError("cannot parse braid word '" + text + "'");
    auto caret = tok.find('^');
    std::string gs = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    std::string es = caret == std::string::npos ? "1" : tok.substr(caret + 1);
    std::size_t used_g = 0, used_e = 0;
    int g = 0, e = 1;
    try {
      g = std::stoi(gs, &used_g);
      e = std::stoi(es, &used_e);
    } catch (const std::logic_error&) {
      throw AlgebraError("cannot parse braid word '" + text + "'");
    }
    if (used_g != gs.size() || used_e != es.size()) throw AlgebraError("cannot parse braid word '" + text + "'");
    for (int k = 0; k < std::abs(e); ++k) letters.push_back(e > 0 ? g : -g);
  }
  return BraidWord(strands, letters);
}

BraidWord BraidWord::inverse() const {
  std::vector<int> l(letters_.rbegin(), letters_.rend());
  for (int& x : l) x = -x;
  return BraidWord(strands_, l);
}

BraidWord BraidWord::shifted(int k) const {
  std::vector<int> l = letters_;
  for (int& x : l) x += x > 0 ? k : -k;
  return BraidWord(strands_ + k, l);
}

BraidWord BraidWord::extended(int k) const { return BraidWord(strands_ + k, letters_); }

std::string BraidWord::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (int l : letters_) {
    if (!out.empty()) out += " ";
    out += "s" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

BraidWord compose(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw AlgebraError("strand mismatch in composition");
  std::vector<int> l = u.letters();
  l.insert(l.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), l);
}

BraidWord monoidal(const BraidWord& u, const BraidWord& v) {
  return compose(u.extended(v.strands()), v.shifted(u.strands()));
}

BraidWord braiding(int n, int m) {
  std::vector<int> l;
  for (int k = 1; k <= n && m > 0; ++k)
    for (int i = m + k - 1; i >= k; --i) l.push_back(i);
  return BraidWord(n + m, l);
}

UBetaMorphism ubeta_compose(const UBetaMorphism& g, const UBetaMorphism& f) {
  if (f.target != g.source) throw AlgebraError("morphisms are not composable");
  BraidWord w = compose(g.word, f.word.shifted(g.target - g.source));
  return {f.source, g.target, w};
}

UBetaMorphism ubeta_monoidal(const UBetaMorphism& g, const UBetaMorphism& f) {
  int m = g.source, dm = g.target - g.source;
  int n = f.source, dn = f.target - f.source;
  BraidWord correction = braiding(m, dn).inverse().shifted(dm).extended(n);
  BraidWord w = compose(monoidal(g.word, f.word), correction);
  return {m + n, g.target + f.target, w};
}

// ------------------------------------------------------ representations

PolyMatrix burau_matrix(int n, int gen, const LaurentPoly& t) {
  int i = std::abs(gen);
  if (gen == 0 || i > n - 1) throw AlgebraError("Artin generator index out of range");
  PolyMatrix m = PolyMatrix::identity(n);
  PolyMatrix b(2, 2);
  if (gen > 0) {
    b = PolyMatrix::from_rows({{LaurentPoly(1) - t, t}, {1, 0}});
  } else {
    LaurentPoly ti = t.inverse();
    b = PolyMatrix::from_rows({{0, 1}, {ti, LaurentPoly(1) - ti}});
  }
  m.set_block(i - 1, i - 1, b);
  return m;
}

int lk_index(int n, int j, int k) {
  // Pairs (a, b) with a < j come first: sum_{a<j} (n - a).
  int idx = 0;
  for (int a = 1; a < j; ++a) idx += n - a;
  return idx + (k - j - 1);
}

namespace {

PolyMatrix lk_positive(int n, int i) {
  int dim = n * (n - 1) / 2;
  PolyMatrix m(dim, dim);
  LaurentPoly t = LaurentPoly::t(), q = LaurentPoly::q(), one = 1;
  auto put = [&](int row_j, int row_k, int col, const LaurentPoly& c) {
    m(lk_index(n, row_j, row_k), col) += c;
  };
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      int col = lk_index(n, j, k);
      if (i != j - 1 && i != j && i != k - 1 && i != k) {
        put(j, k, col, 1);
      } else if (i == j - 1) {
        put(i, k, col, t);
        put(i, i + 1, col, t * t - t);
        put(i + 1, k, col, one - t);
      } else if (i == j && i != k - 1) {
        put(i + 1, k, col, 1);
      } else if (i == k - 1 && i != j) {
        put(j, i, col, t);
        put(j, i + 1, col, one - t);
        put(i, i + 1, col, -(t * t - t) * q);
      } else if (i == k) {
        put(j, i + 1, col, 1);
      } else {  // i == j == k - 1
        put(i, i + 1, col, -q * t * t);
      }
    }
  return m;
}

}  // namespace

PolyMatrix lk_matrix(int n, int gen) {
  int i = std::abs(gen);
  if (gen == 0 || i > n - 1) throw AlgebraError("Artin generator index out of range");
  if (gen > 0) return lk_positive(n, i);
  static std::mutex mu;
  static std::map<std::pair<int, int>, PolyMatrix> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, i});
    if (it != cache.end()) return it->second;
  }
  PolyMatrix inv = lk_positive(n, i).inverse();
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(n, i), inv);
  return inv;
}

PolyMatrix word_matrix(const BraidWord& w, const std::function<PolyMatrix(int, int)>& gen, int dim) {
  PolyMatrix m = PolyMatrix::identity(dim);
  for (int l : w.letters()) m = m * gen(w.strands(), l);
  return m;
}

namespace {

QMatrix eval_word(const BraidWord& w, int dim, const std::function<PolyMatrix(int, int)>& gen,
                  const EvalPoint& p) {
  QMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  for (int l : w.letters()) m = m * gen(w.strands(), l).eval(p);
  return m;
}

std::string point_str(const EvalPoint& p) {
  return "t=" + p.t.get_str() + ", q=" + p.q.get_str();
}

}  // namespace

// ------------------------------------------------------------ BraidImage

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = (unsigned __int128)a * b;
  std::uint64_t lo = std::uint64_t(r & kPrime), hi = std::uint64_t(r >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::uint64_t reduce(const Rational& x) {
  mpz_class num = x.get_num() % mpz_class(std::to_string(kPrime));
  if (num < 0) num += mpz_class(std::to_string(kPrime));
  mpz_class den = x.get_den() % mpz_class(std::to_string(kPrime));
  if (den == 0) throw AlgebraError("evaluation point is singular modulo the prime");
  std::uint64_t n = std::stoull(num.get_str()), d = std::stoull(den.get_str());
  return mulmod(n, powmod(d, kPrime - 2));
}

std::uint64_t reduce_poly(const LaurentPoly& f, std::uint64_t t, std::uint64_t ti, std::uint64_t q,
                          std::uint64_t qi) {
  std::uint64_t s = 0;
  for (const auto& term : f.terms()) {
    std::uint64_t v = reduce(term.c);
    v = mulmod(v, term.a >= 0 ? powmod(t, term.a) : powmod(ti, -term.a));
    v = mulmod(v, term.b >= 0 ? powmod(q, term.b) : powmod(qi, -term.b));
    s = addmod(s, v);
  }
  return s;
}

using IntPoly = BraidImage::IntPoly;

void trim(IntPoly& p) {
  std::size_t a = 0, b = p.c.size();
  while (a < b && p.c[a] == 0) ++a;
  while (b > a && p.c[b - 1] == 0) --b;
  if (a == b) {
    p.lo = 0;
    p.c.clear();
    return;
  }
  p.c = std::vector<__int128>(p.c.begin() + a, p.c.begin() + b);
  p.lo += int(a);
}

IntPoly to_intpoly(const LaurentPoly& f) {
  IntPoly p;
  if (f.is_zero()) return p;
  int lo = f.terms().front().a, hi = f.terms().back().a;
  p.lo = lo;
  p.c.assign(hi - lo + 1, 0);
  for (const auto& term : f.terms()) {
    if (term.b != 0 || term.c.get_den() != 1) throw AlgebraError("Burau entry is not integral in t");
    p.c[term.a - lo] += (__int128)term.c.get_num().get_si();
  }
  trim(p);
  return p;
}

// acc += x * y with overflow detection.
void muladd(IntPoly& acc, const IntPoly& x, const IntPoly& y) {
  if (x.c.empty() || y.c.empty()) return;
  int lo = x.lo + y.lo;
  int hi = lo + int(x.c.size() + y.c.size()) - 2;
  if (acc.c.empty()) {
    acc.lo = lo;
    acc.c.assign(hi - lo + 1, 0);
  } else {
    int alo = std::min(acc.lo, lo), ahi = std::max(acc.lo + int(acc.c.size()) - 1, hi);
    if (alo != acc.lo || ahi != acc.lo + int(acc.c.size()) - 1) {
      std::vector<__int128> c(ahi - alo + 1, 0);
      for (std::size_t k = 0; k < acc.c.size(); ++k) c[acc.lo - alo + k] = acc.c[k];
      acc.c = std::move(c);
      acc.lo = alo;
    }
  }
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] == 0) continue;
    for (std::size_t j = 0; j < y.c.size(); ++j) {
      __int128 m, s;
      if (__builtin_mul_overflow(x.c[i], y.c[j], &m)) throw AlgebraError("Burau coefficient overflow");
      __int128& slot = acc.c[x.lo + y.lo + int(i + j) - acc.lo];
      if (__builtin_add_overflow(slot, m, &s)) throw AlgebraError("Burau coefficient overflow");
      slot = s;
    }
  }
}

}  // namespace

BraidImage operator*(const BraidImage& x, const BraidImage& y) {
  if (x.n_ != y.n_ || x.lk_.size() != y.lk_.size()) throw AlgebraError("incompatible braid images");
  BraidImage out = x;
  int n = x.n_;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      IntPoly acc;
      for (int k = 0; k < n; ++k) muladd(acc, x.burau_[r * n + k], y.burau_[k * n + c]);
      trim(acc);
      out.burau_[r * n + c] = std::move(acc);
    }
  int d = x.lkdim_;
  for (std::size_t p = 0; p < x.lk_.size(); ++p) {
    const auto &a = x.lk_[p], &b = y.lk_[p];
    auto& o = out.lk_[p];
    std::fill(o.begin(), o.end(), 0);
    for (int r = 0; r < d; ++r)
      for (int k = 0; k < d; ++k) {
        std::uint64_t v = a[r * d + k];
        if (v == 0) continue;
        for (int c = 0; c < d; ++c) o[r * d + c] = addmod(o[r * d + c], mulmod(v, b[k * d + c]));
      }
  }
  return out;
}

std::string BraidImage::difference(const BraidImage& other) const {
  if (n_ != other.n_) return "strand counts differ";
  if (burau_ != other.burau_) return "Burau matrices differ symbolically";
  for (std::size_t p = 0; p < lk_.size(); ++p)
    if (lk_[p] != other.lk_[p]) return "Lawrence-Krammer matrices differ at " + labels_[p];
  return "";
}

BraidImager::BraidImager(int n, int certainty, std::uint64_t seed) : n_(n) {
  id_.n_ = n;
  id_.lkdim_ = n * (n - 1) / 2;
  id_.burau_.resize(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) id_.burau_[i * n + i] = {0, {1}};
  int d = id_.lkdim_;
  auto points = random_points(seed, certainty);
  std::vector<std::array<std::uint64_t, 4>> red;
  for (const auto& p : points) {
    std::uint64_t t = reduce(p.t), q = reduce(p.q);
    red.push_back({t, powmod(t, kPrime - 2), q, powmod(q, kPrime - 2)});
    BraidImage::ModMatrix m(std::size_t(d) * d, 0);
    for (int i = 0; i < d; ++i) m[i * d + i] = 1;
    id_.lk_.push_back(m);
    id_.labels_.push_back("t=" + p.t.get_str() + ", q=" + p.q.get_str());
  }
  for (int sign : {1, -1})
    for (int i = 1; i < n; ++i) {
      BraidImage g = id_;
      PolyMatrix b = burau_matrix(n, sign * i);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g.burau_[r * n + c] = to_intpoly(b(r, c));
      PolyMatrix l = lk_matrix(n, sign * i);
      for (std::size_t p = 0; p < red.size(); ++p)
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c)
            g.lk_[p][r * d + c] = reduce_poly(l(r, c), red[p][0], red[p][1], red[p][2], red[p][3]);
      (sign > 0 ? pos_ : neg_).push_back(std::move(g));
    }
}

BraidImage BraidImager::identity() const { return id_; }

BraidImage BraidImager::generator(int gen) const {
  if (gen == 0 || std::abs(gen) >= n_) throw AlgebraError("Artin generator index out of range");
  return gen > 0 ? pos_[gen - 1] : neg_[-gen - 1];
}

BraidImage BraidImager::word(const BraidWord& w) const {
  if (w.strands() != n_) throw AlgebraError("strand mismatch in braid image");
  BraidImage m = id_;
  for (int l : w.letters()) m = m * generator(l);
  return m;
}

BraidComparison braid_equal(const BraidWord& u, const BraidWord& v, int certainty, std::uint64_t seed) {
  if (u.strands() != v.strands()) throw AlgebraError("strand mismatch in comparison");
  if (u == v) return {};
  BraidImager im(u.strands(), certainty, seed);
  std::string diff = im.word(u).difference(im.word(v));
  if (diff.empty()) return {};
  return {false, diff};
}

BraidComparison ubeta_equal(const UBetaMorphism& f, const UBetaMorphism& g, int certainty,
                            std::uint64_t seed) {
  if (f.source != g.source || f.target != g.target) return {false, "different source or target"};
  int n = f.source, n2 = f.target, k = n2 - n;
  // Burau: M(word) applied to the last-coordinates embedding.
  auto bur = [](int s, int x) { return burau_matrix(s, x); };
  PolyMatrix sb = PolyMatrix::zero(n2, n);
  sb.set_block(k, 0, PolyMatrix::identity(n));
  if (word_matrix(f.word, bur, n2) * sb != word_matrix(g.word, bur, n2) * sb)
    return {false, "Burau evaluations differ symbolically"};
  int d = n * (n - 1) / 2, d2 = n2 * (n2 - 1) / 2;
  QMatrix sl(d2, d);
  for (int j = 1; j <= n; ++j)
    for (int l = j + 1; l <= n; ++l) sl(lk_index(n2, j + k, l + k), lk_index(n, j, l)) = 1;
  for (const auto& p : random_points(seed, certainty)) {
    if (!(eval_word(f.word, d2, lk_matrix, p) * sl == eval_word(g.word, d2, lk_matrix, p) * sl))
      return {false, "Lawrence-Krammer evaluations differ at " + point_str(p)};
  }
  return {};
}

// ---------------------------------------------------------------- sigma

SigmaFamily sigma_family(const std::string& name) {
  if (name == "pure_braid" || name == "pure-braid") {
    return {"pure_braid", [](int n, int i) {
              std::vector<int> l;
              for (int k = 1; k < i; ++k) l.push_back(-k);
              l.push_back(i);
              l.push_back(i);
              for (int k = i - 1; k >= 1; --k) l.push_back(k);
              return BraidWord(n + 1, l);
            }};
  }
  if (name == "trivial") {
    return {"trivial", [](int n, int) { return BraidWord(n + 1); }};
  }
  throw AlgebraError("unknown sigma family '" + name + "'");
}

BraidWord sigma_eval(const SigmaFamily& s, const FreeWord& w) {
  int n = w.rank();
  BraidWord out(n + 1);
  if (n == 0) return out;
  for (int l : w.letters()) {
    BraidWord g = s.rule(n, std::abs(l));
    out = compose(out, l > 0 ? g : g.inverse());
  }
  return out;
}

}  // namespace lmkit
