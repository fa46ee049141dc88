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

#ifndef LMKIT_LAURENT_HPP
#define LMKIT_LAURENT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmkit {

using Rational = mpq_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalPoint {
  Rational t;
  Rational q;
};

// Seeded nonzero rational points, avoiding +-1 (roots of unity make
// Burau-type representations degenerate).
std::vector<EvalPoint> random_points(std::uint64_t seed, int count);

// Element of Q[t^{+-1}, q^{+-1}]. Terms are kept sorted by (t-exponent,
// q-exponent) with no zero coefficients.
class LaurentPoly {
 public:
  struct Term {
    int a;  // power of t
    int b;  // power of q
    Rational c;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integers convert implicitly
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly monomial(const Rational& c, int a, int b);
  static LaurentPoly t(int power = 1) { return monomial(1, power, 0); }
  static LaurentPoly q(int power = 1) { return monomial(1, 0, power); }
  static LaurentPoly parse(const std::string& text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_unit() const { return terms_.size() == 1; }
  bool is_constant() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) { return !(x == y); }

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly pow(int e) const;
  LaurentPoly inverse() const;  // units only
  Rational eval(const EvalPoint& p) const;
  // Substitute t -> t^k, q -> q^k (used for Bur_{t^2}).
  LaurentPoly substitute_power(int k) const;
  std::string str() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

// Exact quotient x / y; throws if y does not divide x.
LaurentPoly divexact(const LaurentPoly& x, const LaurentPoly& y);

class QMatrix;

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}
  PolyMatrix(int rows, int cols, std::vector<LaurentPoly> entries);

  static PolyMatrix identity(int n);
  static PolyMatrix zero(int rows, int cols) { return PolyMatrix(rows, cols); }
  static PolyMatrix from_rows(const std::vector<std::vector<LaurentPoly>>& rows);
  static PolyMatrix from_strings(const std::vector<std::vector<std::string>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const LaurentPoly& operator()(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }
  LaurentPoly& operator()(int r, int c) { return e_[std::size_t(r) * cols_ + c]; }
  const std::vector<LaurentPoly>& entries() const { return e_; }

  bool is_zero() const;
  bool is_identity() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  PolyMatrix scaled(const LaurentPoly& y) const;
  PolyMatrix transpose() const;
  PolyMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const PolyMatrix& b);
  PolyMatrix select_columns(const std::vector<int>& cols) const;
  PolyMatrix select_rows(const std::vector<int>& rows) const;
  PolyMatrix substitute_power(int k) const;

  LaurentPoly det() const;
  PolyMatrix inverse() const;  // requires a unit determinant
  QMatrix eval(const EvalPoint& p) const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentPoly> e_;
};

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);

// Maximum rank over the given evaluation points: a lower bound for the
// rank over the fraction field, exact with high probability.
int rank_probabilistic(const PolyMatrix& a, const std::vector<EvalPoint>& points);

class QMatrix {
 public:
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& operator()(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }
  Rational& operator()(int r, int c) { return e_[std::size_t(r) * cols_ + c]; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);
  int rank() const;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

}  // namespace lmkit

#endif
