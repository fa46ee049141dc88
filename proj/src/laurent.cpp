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

#include "lmkit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lmkit {

namespace {

bool exp_less(int a1, int b1, int a2, int b2) { return a1 < a2 || (a1 == a2 && b1 < b2); }

}  // namespace

std::vector<EvalPoint> random_points(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> num(2, 97), den(1, 13), sgn(0, 1);
  auto draw = [&]() {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (r == 1) r = Rational(98, 13);
    return sgn(rng) ? Rational(-r) : r;
  };
  std::vector<EvalPoint> out;
  for (int i = 0; i < count; ++i) {
    Rational t = draw();
    Rational q = draw();
    out.push_back({t, q});
  }
  return out;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, 0, Rational(c)});
}

// mpq_class(num, den) is not reduced on construction; every coefficient
// entering a polynomial is canonicalized so that == is structural.
LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) {
    terms_.push_back({0, 0, c});
    terms_.back().c.canonicalize();
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int a, int b) {
  LaurentPoly p;
  if (c != 0) {
    p.terms_.push_back({a, b, c});
    p.terms_.back().c.canonicalize();
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].a == 0 && terms_[0].b == 0 && terms_[0].c == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].a == 0 && terms_[0].b == 0);
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return exp_less(x.a, x.b, y.a, y.b); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& term : terms_) {
    if (!out.empty() && out.back().a == term.a && out.back().b == term.b) {
      out.back().c += term.c;
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  terms_ = std::move(out);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& term : r.terms_) term.c = -term.c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && exp_less(terms_[i].a, terms_[i].b, o.terms_[j].a, o.terms_[j].b))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() ||
               exp_less(o.terms_[j].a, o.terms_[j].b, terms_[i].a, terms_[i].b)) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].c + o.terms_[j].c;
      if (c != 0) out.push_back({terms_[i].a, terms_[i].b, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly r;
  if (x.terms_.empty() || y.terms_.empty()) return r;
  r.terms_.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& u : x.terms_)
    for (const auto& v : y.terms_) r.terms_.push_back({u.a + v.a, u.b + v.b, u.c * v.c});
  if (x.terms_.size() > 1 && y.terms_.size() > 1) r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    const auto& u = x.terms_[i];
    const auto& v = y.terms_[i];
    if (u.a != v.a || u.b != v.b || u.c != v.c) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Rational k = c;
  k.canonicalize();
  LaurentPoly r = *this;
  for (auto& term : r.terms_) term.c *= k;
  return r;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_unit()) throw AlgebraError("not invertible");
  const auto& u = terms_[0];
  return monomial(1 / u.c, -u.a, -u.b);
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational LaurentPoly::eval(const EvalPoint& p) const {
  auto power = [](const Rational& x, int e) {
    Rational r = 1;
    Rational b = e < 0 ? Rational(1 / x) : x;
    for (int k = 0; k < std::abs(e); ++k) r *= b;
    return r;
  };
  Rational sum = 0;
  for (const auto& term : terms_) sum += term.c * power(p.t, term.a) * power(p.q, term.b);
  return sum;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r;
  for (const auto& term : terms_) r.terms_.push_back({term.a * k, term.b * k, term.c});
  r.normalize();
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms_) {
    Rational c = term.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> monos;
    auto mono = [&](char v, int e) {
      if (e == 0) return;
      monos.push_back(e == 1 ? std::string(1, v) : std::string(1, v) + "^" + std::to_string(e));
    };
    mono('t', term.a);
    mono('q', term.b);
    bool show_coeff = monos.empty() || c != 1;
    std::string out;
    if (show_coeff) out = c.get_str();
    for (const auto& m : monos) {
      if (!out.empty()) out += "*";
      out += m;
    }
    os << out;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  LaurentPoly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    LaurentPoly result;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      LaurentPoly term = parse_term();
      result += sign < 0 ? -term : term;
      skip();
      if (pos_ == s_.size()) break;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError("cannot parse polynomial '" + s_ + "': " + what);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  int parse_int() {
    skip();
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    skip();
    int v = std::stoi(digits());
    return neg ? -v : v;
  }

  LaurentPoly parse_term() {
    Rational c = 1;
    int a = 0, b = 0;
    bool need_mono = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip();
      std::string den = "1";
      if (peek() == '/') {
        get();
        skip();
        den = digits();
      }
      c = Rational(num + "/" + den);
      c.canonicalize();
      need_mono = false;
      skip();
      if (peek() != '*') return monomial_of(c, a, b);
      get();
      skip();
    }
    while (true) {
      char v = peek();
      if (v != 't' && v != 'q') {
        if (need_mono) fail("expected 't' or 'q'");
        break;
      }
      get();
      skip();
      int e = 1;
      if (peek() == '^') {
        get();
        e = parse_int();
      }
      (v == 't' ? a : b) += e;
      need_mono = false;
      skip();
      if (peek() != '*') break;
      get();
      skip();
      need_mono = true;
    }
    return monomial_of(c, a, b);
  }

  static LaurentPoly monomial_of(const Rational& c, int a, int b) {
    return LaurentPoly::monomial(c, a, b);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) { return PolyParser(text).parse(); }

LaurentPoly divexact(const LaurentPoly& x, const LaurentPoly& y) {
  if (y.is_zero()) throw AlgebraError("division by zero");
  if (y.is_unit()) return x * y.inverse();
  if (x.is_zero()) return {};
  const auto& lead_y = y.terms().back();
  const auto& low_x = x.terms().front();
  const auto& low_y = y.terms().front();
  int min_a = low_x.a - low_y.a, min_b = low_x.b - low_y.b;
  LaurentPoly quotient, rem = x;
  while (!rem.is_zero()) {
    const auto& lead_r = rem.terms().back();
    int a = lead_r.a - lead_y.a, b = lead_r.b - lead_y.b;
    if (exp_less(a, b, min_a, min_b)) throw AlgebraError("inexact division");
    LaurentPoly m = LaurentPoly::monomial(lead_r.c / lead_y.c, a, b);
    quotient += m;
    rem -= m * y;
  }
  return quotient;
}

// ---------------------------------------------------------------- matrices

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<LaurentPoly> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != std::size_t(rows) * cols) throw AlgebraError("entry count does not match shape");
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<LaurentPoly>>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  PolyMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw AlgebraError("ragged matrix");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::from_strings(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<LaurentPoly>> p;
  for (const auto& row : rows) {
    p.emplace_back();
    for (const auto& s : row) p.back().push_back(LaurentPoly::parse(s));
  }
  return from_rows(p);
}

bool PolyMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const LaurentPoly& x) { return x.is_zero(); });
}

bool PolyMatrix::is_identity() const { return is_square() && *this == identity(rows_); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw AlgebraError("dimension mismatch in product");
  PolyMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const LaurentPoly& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const LaurentPoly& y = b(k, j);
        if (y.is_zero()) continue;
        m(i, j) += x * y;
      }
    }
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AlgebraError("dimension mismatch in sum");
  PolyMatrix m = a;
  for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
  return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + b.scaled(-1); }

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& y) const {
  PolyMatrix m = *this;
  for (auto& x : m.e_) x *= y;
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

PolyMatrix PolyMatrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw AlgebraError("block out of range");
  PolyMatrix m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void PolyMatrix::set_block(int r0, int c0, const PolyMatrix& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw AlgebraError("block out of range");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

PolyMatrix PolyMatrix::select_columns(const std::vector<int>& cols) const {
  PolyMatrix m(rows_, int(cols.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, int(j)) = (*this)(i, cols[j]);
  return m;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<int>& rows) const {
  PolyMatrix m(int(rows.size()), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols_; ++j) m(int(i), j) = (*this)(rows[i], j);
  return m;
}

PolyMatrix PolyMatrix::substitute_power(int k) const {
  PolyMatrix m = *this;
  for (auto& x : m.e_) x = x.substitute_power(k);
  return m;
}

namespace {

// Row with a nonzero entry in column k at or below row k, preferring the
// sparsest pivot to keep intermediate minors small.
int choose_pivot(const PolyMatrix& a, int k) {
  int best = -1;
  std::size_t best_size = 0;
  for (int i = k; i < a.rows(); ++i) {
    const auto& x = a(i, k);
    if (x.is_zero()) continue;
    if (best < 0 || x.terms().size() < best_size) {
      best = i;
      best_size = x.terms().size();
    }
  }
  return best;
}

void swap_rows(PolyMatrix& a, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

}  // namespace

LaurentPoly PolyMatrix::det() const {
  if (!is_square()) throw AlgebraError("determinant of a non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  PolyMatrix a = *this;
  LaurentPoly prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int p = choose_pivot(a, k);
    if (p < 0) return {};
    if (p != k) {
      swap_rows(a, p, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = divexact(v, prev);
      }
      a(i, k) = LaurentPoly();
    }
    prev = a(k, k);
  }
  LaurentPoly d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

PolyMatrix PolyMatrix::inverse() const {
  if (!is_square()) throw AlgebraError("inverse of a non-square matrix");
  int n = rows_;
  PolyMatrix a(n, 2 * n);
  a.set_block(0, 0, *this);
  a.set_block(0, n, identity(n));
  LaurentPoly prev = 1;
  // Fraction-free Gauss-Jordan: afterwards the left block is d*Id and the
  // right block is d times the inverse, d = +-det.
  for (int k = 0; k < n; ++k) {
    int p = choose_pivot(a, k);
    if (p < 0) throw AlgebraError("not invertible");
    swap_rows(a, p, k);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      LaurentPoly f = a(i, k);
      for (int j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        LaurentPoly v = a(k, k) * a(i, j);
        if (!f.is_zero() && !a(k, j).is_zero()) v -= f * a(k, j);
        a(i, j) = prev.is_one() ? v : divexact(v, prev);
      }
      a(i, k) = LaurentPoly();
    }
    prev = a(k, k);
  }
  if (n == 0) return {};
  const LaurentPoly& d = a(0, 0);
  if (!d.is_unit()) throw AlgebraError("not invertible");
  return a.block(0, n, n, n).scaled(d.inverse());
}

QMatrix PolyMatrix::eval(const EvalPoint& p) const {
  QMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(p);
  return m;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).str());
  return out;
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) m.set_block(i * b.rows(), j * b.cols(), b.scaled(a(i, j)));
  return m;
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw AlgebraError("dimension mismatch in hstack");
  PolyMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.cols()) throw AlgebraError("dimension mismatch in vstack");
  PolyMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

int rank_probabilistic(const PolyMatrix& a, const std::vector<EvalPoint>& points) {
  int best = 0;
  for (const auto& p : points) best = std::max(best, a.eval(p).rank());
  return best;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw AlgebraError("dimension mismatch in product");
  QMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

int QMatrix::rank() const {
  QMatrix m = *this;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
    for (int i = r + 1; i < rows_; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (int j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace lmkit
