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

#ifndef LMKIT_REPORT_HPP
#define LMKIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace lmkit {

// Outcome of a range-bounded check. A failing report carries the first
// violation as its witness and keeps every violation in `failures`.
struct Report {
  std::string condition;
  bool pass = true;
  nlohmann::json range = nlohmann::json::object();
  nlohmann::json witness = nullptr;
  std::uint64_t seed = 0;
  nlohmann::json failures = nlohmann::json::array();

  int violations() const { return int(failures.size()); }
  void fail(const nlohmann::json& w) {
    if (pass) witness = w;
    pass = false;
    failures.push_back(w);
  }
  void absorb(const Report& other) {
    for (const auto& w : other.failures) fail(w);
  }
  nlohmann::json to_json() const {
    return {{"condition", condition},
            {"verdict", pass ? "pass" : "fail"},
            {"range", range},
            {"witness", witness},
            {"seed", seed},
            {"violations", violations()}};
  }
};

}  // namespace lmkit

#endif
