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

#include "lmkit/freegroup.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>

namespace lmkit {

FreeWord::FreeWord(int rank, std::vector<std::pair<int, int>> syllables)
    : rank_(rank), syl_(std::move(syllables)) {
  for (const auto& [g, e] : syl_)
    if (g < 1 || g > rank_) throw AlgebraError("generator index out of range");
  reduce();
}

void FreeWord::reduce() {
  std::vector<std::pair<int, int>> out;
  for (const auto& s : syl_) {
    if (s.second == 0) continue;
    if (!out.empty() && out.back().first == s.first) {
      out.back().second += s.second;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  syl_ = std::move(out);
}

FreeWord FreeWord::generator(int rank, int i, int exponent) { return FreeWord(rank, {{i, exponent}}); }

FreeWord FreeWord::parse(int rank, const std::string& text) {
  // Letters separated by whitespace or '*': g3, g1^-2, or the identity e.
  std::string s = text;
  for (char& c : s)
    if (c == '*') c = ' ';
  std::vector<std::pair<int, int>> syl;
  std::istringstream ss(s);
  std::string part;
  auto bad = [&]() { return AlgebraError("cannot parse word '" + text + "'"); };
  while (ss >> part) {
    if (part == "e") continue;
    if (part.size() < 2 || part[0] != 'g') throw bad();
    auto caret = part.find('^');
    std::string gs = part.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    std::string es = caret == std::string::npos ? "1" : part.substr(caret + 1);
    std::size_t used_g = 0, used_e = 0;
    int g = 0, e = 0;
    try {
      g = std::stoi(gs, &used_g);
      e = std::stoi(es, &used_e);
    } catch (const std::logic_error&) {
      throw bad();
    }
    if (used_g != gs.size() || used_e != es.size()) throw bad();
    if (g < 1 || g > rank) throw AlgebraError("generator g" + std::to_string(g) + " outside F_" + std::to_string(rank));
    syl.emplace_back(g, e);
  }
  return FreeWord(rank, syl);
}

int FreeWord::length() const {
  int l = 0;
  for (const auto& s : syl_) l += std::abs(s.second);
  return l;
}

std::vector<int> FreeWord::letters() const {
  std::vector<int> out;
  for (const auto& [g, e] : syl_)
    for (int k = 0; k < std::abs(e); ++k) out.push_back(e > 0 ? g : -g);
  return out;
}

FreeWord FreeWord::from_letters(int rank, const std::vector<int>& letters) {
  std::vector<std::pair<int, int>> syl;
  for (int l : letters) syl.emplace_back(std::abs(l), l > 0 ? 1 : -1);
  return FreeWord(rank, syl);
}

FreeWord FreeWord::inverse() const {
  FreeWord r(rank_);
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.syl_.emplace_back(it->first, -it->second);
  return r;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  if (u.rank_ != v.rank_) throw AlgebraError("rank mismatch");
  FreeWord r = u;
  r.syl_.insert(r.syl_.end(), v.syl_.begin(), v.syl_.end());
  // Only the junction can cancel; reduce() handles cascades.
  r.reduce();
  return r;
}

bool operator<(const FreeWord& u, const FreeWord& v) {
  if (u.rank_ != v.rank_) return u.rank_ < v.rank_;
  int lu = u.length(), lv = v.length();
  if (lu != lv) return lu < lv;
  return u.syl_ < v.syl_;
}

FreeWord FreeWord::with_rank(int rank) const {
  FreeWord r(rank, syl_);
  return r;
}

std::string FreeWord::str() const {
  if (syl_.empty()) return "e";
  std::string out;
  for (const auto& [g, e] : syl_) {
    if (!out.empty()) out += "*";
    out += "g" + std::to_string(g);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ------------------------------------------------------------ group ring

GroupRingElement::GroupRingElement(const FreeWord& w, const LaurentPoly& c) : rank_(w.rank()) {
  add_term(w, c);
}

void GroupRingElement::add_term(const FreeWord& w, const LaurentPoly& c) {
  if (w.rank() != rank_) throw AlgebraError("rank mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly GroupRingElement::augmentation() const {
  LaurentPoly s;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  if (o.rank_ != rank_) throw AlgebraError("rank mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElement operator-(GroupRingElement x, const GroupRingElement& y) { return x += y.scaled(-1); }

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.rank_ != y.rank_) throw AlgebraError("rank mismatch");
  GroupRingElement r(x.rank_);
  for (const auto& [u, a] : x.terms_)
    for (const auto& [v, b] : y.terms_) r.add_term(u * v, a * b);
  return r;
}

GroupRingElement GroupRingElement::scaled(const LaurentPoly& c) const {
  GroupRingElement r(rank_);
  for (const auto& [w, a] : terms_) r.add_term(w, a * c);
  return r;
}

std::string GroupRingElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")[" + w.str() + "]";
  }
  return out;
}

GroupRingElement AugIdealElement::expand() const {
  GroupRingElement r(rank);
  for (int i = 1; i <= rank; ++i) {
    const auto& c = coords[i - 1];
    r += GroupRingElement(FreeWord::generator(rank, i)) * c;
    r += c.scaled(-1);
  }
  return r;
}

AugIdealElement fox_derivatives(const FreeWord& w) {
  int n = w.rank();
  AugIdealElement d{n, std::vector<GroupRingElement>(n, GroupRingElement(n))};
  // d(x_1 ... x_m) = sum_k d(x_k) x_{k+1} ... x_m, scanning from the right.
  auto letters = w.letters();
  FreeWord suffix(n);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    int l = *it;
    int g = std::abs(l);
    FreeWord x = FreeWord::generator(n, g, l > 0 ? 1 : -1);
    if (l > 0)
      d.coords[g - 1].add_term(suffix, 1);
    else
      d.coords[g - 1].add_term(x * suffix, -1);
    suffix = x * suffix;
  }
  return d;
}

// ------------------------------------------------------------- maps

FreeGroupMap::FreeGroupMap(int source_rank, int target_rank, std::vector<FreeWord> images)
    : source_(source_rank), target_(target_rank), images_(std::move(images)) {
  if (int(images_.size()) != source_) throw AlgebraError("image count does not match source rank");
  for (const auto& w : images_)
    if (w.rank() != target_) throw AlgebraError("image rank does not match target rank");
}

FreeGroupMap FreeGroupMap::identity(int n) {
  std::vector<FreeWord> im;
  for (int i = 1; i <= n; ++i) im.push_back(FreeWord::generator(n, i));
  return FreeGroupMap(n, n, im);
}

FreeWord FreeGroupMap::apply(const FreeWord& w) const {
  if (w.rank() != source_) throw AlgebraError("rank mismatch");
  FreeWord r(target_);
  for (const auto& [g, e] : w.syllables()) {
    FreeWord x = e > 0 ? images_[g - 1] : images_[g - 1].inverse();
    for (int k = 0; k < std::abs(e); ++k) r = r * x;
  }
  return r;
}

GroupRingElement FreeGroupMap::apply(const GroupRingElement& x) const {
  if (x.rank() != source_) throw AlgebraError("rank mismatch");
  GroupRingElement r(target_);
  for (const auto& [w, c] : x.terms()) r.add_term(apply(w), c);
  return r;
}

AugIdealElement FreeGroupMap::apply(const AugIdealElement& x) const {
  if (x.rank != source_) throw AlgebraError("rank mismatch");
  AugIdealElement r{target_, std::vector<GroupRingElement>(target_, GroupRingElement(target_))};
  for (int i = 1; i <= source_; ++i) {
    GroupRingElement c = apply(x.coords[i - 1]);
    if (c.is_zero()) continue;
    AugIdealElement d = fox_derivatives(images_[i - 1]);
    for (int k = 0; k < target_; ++k) r.coords[k] += d.coords[k] * c;
  }
  return r;
}

FreeGroupMap FreeGroupMap::after(const FreeGroupMap& other) const {
  if (other.target_ != source_) throw AlgebraError("rank mismatch in composition");
  std::vector<FreeWord> im;
  for (const auto& w : other.images_) im.push_back(apply(w));
  return FreeGroupMap(other.source_, target_, im);
}

std::string FreeGroupMap::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) out += (i ? ", " : "") + images_[i].str();
  return out + ")";
}

FreeGroupMap include_left(int n, int k) {
  std::vector<FreeWord> im;
  for (int i = 1; i <= n; ++i) im.push_back(FreeWord::generator(n + k, i + k));
  return FreeGroupMap(n, n + k, im);
}

FreeGroupMap include_right(int n, int k) {
  std::vector<FreeWord> im;
  for (int i = 1; i <= n; ++i) im.push_back(FreeWord::generator(n + k, i));
  return FreeGroupMap(n, n + k, im);
}

// ------------------------------------------------------------- actions

namespace {

FreeWord substitute2(const FreeWord& w, const FreeWord& x, const FreeWord& y) {
  return FreeGroupMap(2, x.rank(), {x, y}).apply(w);
}

}  // namespace

FreeGroupMap pair_action(const WadaPair& p, int n, int i) {
  if (i < 1 || i > n - 1) throw AlgebraError("Artin generator index out of range");
  auto im = FreeGroupMap::identity(n).images();
  FreeWord gi = FreeWord::generator(n, i), gj = FreeWord::generator(n, i + 1);
  im[i - 1] = substitute2(p.W, gi, gj);
  im[i] = substitute2(p.V, gi, gj);
  return FreeGroupMap(n, n, im);
}

WadaPair wada_pair(int kind, int m) {
  auto g = [](int i, int e = 1) { return FreeWord::generator(2, i, e); };
  switch (kind) {
    case 1: return {g(2), g(2, m) * g(1) * g(2, -m)};
    case 2: return {g(1), g(2)};
    case 3: return {g(2), g(1, -1)};
    case 4: return {g(2), g(2, -1) * g(1, -1) * g(2)};
    case 5: return {g(2, -1), g(1, -1)};
    case 6: return {g(2, -1), g(2) * g(1) * g(2)};
    case 7: return {g(1) * g(2, -1) * g(1, -1), g(1) * g(2, 2)};
    default: throw AlgebraError("invalid Wada kind " + std::to_string(kind));
  }
}

WadaPair wada_dual(const WadaPair& p, WadaDuality kind, int max_length) {
  auto g = [](int i, int e = 1) { return FreeWord::generator(2, i, e); };
  switch (kind) {
    case WadaDuality::swap:
      return {substitute2(p.V, g(2), g(1)), substitute2(p.W, g(2), g(1))};
    case WadaDuality::backward:
      return {substitute2(p.W, g(1, -1), g(2, -1)).inverse(),
              substitute2(p.V, g(1, -1), g(2, -1)).inverse()};
    case WadaDuality::inverse: break;
  }
  FreeGroupMap phi(2, 2, {p.W, p.V});
  std::optional<FreeWord> pre1, pre2;
  // Breadth-first over reduced words of F_2 by length.
  std::vector<FreeWord> layer{FreeWord(2)};
  for (int len = 0; len <= max_length && !(pre1 && pre2); ++len) {
    std::vector<FreeWord> next;
    for (const auto& w : layer) {
      FreeWord img = phi.apply(w);
      if (!pre1 && img == g(1)) pre1 = w;
      if (!pre2 && img == g(2)) pre2 = w;
      if (len == max_length) continue;
      auto letters = w.letters();
      for (int l : {1, -1, 2, -2}) {
        if (!letters.empty() && letters.back() == -l) continue;
        next.push_back(w * g(std::abs(l), l > 0 ? 1 : -1));
      }
    }
    layer = std::move(next);
  }
  if (!pre1 || !pre2) throw AlgebraError("inverse certificate not found");
  FreeGroupMap psi(2, 2, {*pre1, *pre2});
  if (!(psi.after(phi) == FreeGroupMap::identity(2)) || !(phi.after(psi) == FreeGroupMap::identity(2)))
    throw AlgebraError("inverse certificate not found");
  return {*pre1, *pre2};
}

namespace {

WadaPair cached_inverse(int kind, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, WadaPair> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(kind, kind == 1 ? m : 0);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  WadaPair inv = wada_dual(wada_pair(kind, m), WadaDuality::inverse);
  cache.emplace(key, inv);
  return inv;
}

}  // namespace

FreeGroupMap wada_action(int kind, int m, int n, int gen) {
  int i = std::abs(gen);
  if (gen == 0 || i > n - 1) throw AlgebraError("Artin generator index out of range");
  if (kind < 1 || kind > 7) throw AlgebraError("invalid Wada kind " + std::to_string(kind));
  return pair_action(gen > 0 ? wada_pair(kind, m) : cached_inverse(kind, m), n, i);
}

FreeGroupMap artin_action(int n, int gen) {
  int i = std::abs(gen);
  if (gen == 0 || i > n - 1) throw AlgebraError("Artin generator index out of range");
  auto g = [](int k, int e = 1) { return FreeWord::generator(2, k, e); };
  WadaPair p = gen > 0 ? WadaPair{g(2), g(2, -1) * g(1) * g(2)} : WadaPair{g(1) * g(2) * g(1, -1), g(1)};
  return pair_action(p, n, i);
}

}  // namespace lmkit
