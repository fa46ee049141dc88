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
#include "lmkit/expr.hpp"

#include <cctype>
#include <regex>
#include <stdexcept>
#include <vector>

#include "lmkit/polyfun.hpp"

namespace lmkit {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// Splits at separators that are not nested inside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced ')' in '" + s + "'");
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced '(' in '" + s + "'");
  out.push_back(trim(cur));
  return out;
}

// "head(body)" -> {head, body}; returns false for a bare name.
bool call_form(const std::string& s, std::string& head, std::string& body) {
  std::size_t p = s.find('(');
  if (p == std::string::npos || s.back() != ')') return false;
  head = trim(s.substr(0, p));
  body = s.substr(p + 1, s.size() - p - 2);
  split_top(body, ',');  // balance check
  return true;
}

LaurentPoly poly_arg(const std::string& s) {
  try {
    return LaurentPoly::parse(s);
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad polynomial '" + s + "': " + e.what());
  }
}

}  // namespace

std::string normalize_action(const std::string& name) {
  static const std::regex short_wada(R"(wada(\d+)(?::(-?\d+))?)");
  std::smatch m;
  if (std::regex_match(name, m, short_wada))
    return "wada:" + m[1].str() + (m[2].matched ? ":" + m[2].str() : "");
  return name;
}

FunctorPtr parse_functor(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) throw std::invalid_argument("empty functor expression");
  std::string head, body;
  if (call_form(text, head, body)) {
    if (head == "lm") {
      auto parts = split_top(body, ';');
      if (parts.size() != 2) throw std::invalid_argument("lm(...) needs 'ACTION, SIGMA[, PRE[, POST]]; expr'");
      auto args = split_top(parts[0], ',');
      if (args.size() < 2 || args.size() > 4) throw std::invalid_argument("lm(...) takes 2 to 4 parameters");
      LMConfig cfg = LMConfig::make(normalize_action(args[0]), args[1]);
      if (args.size() > 2) cfg.pre_twist = poly_arg(args[2]);
      if (args.size() > 3) cfg.post_scale = poly_arg(args[3]);
      return lm_apply(cfg, parse_functor(parts[1]));
    }
    if (head == "sum" || head == "tensor") {
      auto args = split_top(body, ',');
      if (args.size() != 2) throw std::invalid_argument(head + "(...) takes two functors");
      auto f = parse_functor(args[0]), g = parse_functor(args[1]);
      return head == "sum" ? direct_sum(f, g) : tensor(f, g);
    }
    if (head == "tau") {
      auto parts = split_top(body, ';');
      if (parts.size() != 2) throw std::invalid_argument("tau(...) needs 'K; expr'");
      int k = 0;
      try {
        k = std::stoi(parts[0]);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad translation '" + parts[0] + "'");
      }
      if (k < 0) throw std::invalid_argument("translation must be nonnegative");
      return translate(parse_functor(parts[1]), k);
    }
    if (head == "delta") return delta(parse_functor(body));
    if (head == "kappa") return kappa(parse_functor(body));
  }
  try {
    return builtin(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace lmkit
