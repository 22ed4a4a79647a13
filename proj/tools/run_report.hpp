// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROID_FORGE_TOOLS_RUN_REPORT_HPP_
#define MATROID_FORGE_TOOLS_RUN_REPORT_HPP_

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace matroid_forge::cli {

// 64-bit FNV-1a, used to fingerprint the input files of a run.
class Digest {
 public:
  void add(const std::string& bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 1099511628211ULL;
    }
    // Separator so that ("ab", "c") and ("a", "bc") differ.
    hash_ ^= 0xff;
    hash_ *= 1099511628211ULL;
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  std::uint64_t hash_ = 14695981039346656037ULL;
};

/// Ordered key/value record of one invocation. Keys may repeat.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void set_digest(std::string hex) { digest_ = std::move(hex); }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_timing_ms(double ms) { timing_ms_ = ms; }
  void add(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), std::move(value));
  }

  std::string text() const {
    std::string out = "command: " + command_ + "\n";
    out += "inputs: fnv1a64=" + digest_ + "\n";
    if (seed_) out += "seed: " + std::to_string(*seed_) + "\n";
    for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
    if (timing_ms_) out += "timing_ms: " + std::to_string(*timing_ms_) + "\n";
    return out;
  }

  std::string json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["inputs"] = "fnv1a64=" + digest_;
    if (seed_) j["seed"] = *seed_;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [k, v] : entries_) {
      entries.push_back(nlohmann::ordered_json{{"key", k}, {"value", v}});
    }
    j["entries"] = entries;
    if (timing_ms_) j["timing_ms"] = *timing_ms_;
    return j.dump(2) + "\n";
  }

 private:
  std::string command_;
  std::string digest_ = Digest().hex();
  std::optional<std::uint64_t> seed_;
  std::optional<double> timing_ms_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace matroid_forge::cli

#endif  // MATROID_FORGE_TOOLS_RUN_REPORT_HPP_
