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

#ifndef MATROID_FORGE_TRUNCATION_HPP_
#define MATROID_FORGE_TRUNCATION_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matroid_forge/finite_matroid.hpp"
#include "matroid_forge/sets.hpp"

namespace matroid_forge {

/// Level of a truncation: a nonnegative k for the k-truncation, a negative
/// -n for the (-n)-truncation, or the trivial truncation (M itself).
class TruncationLevel {
 public:
  static TruncationLevel trivial() { return TruncationLevel(); }
  static TruncationLevel of(std::int64_t level) {
    TruncationLevel t;
    t.level_ = level;
    return t;
  }

  bool is_trivial() const { return !level_.has_value(); }
  std::int64_t level() const { return level_.value(); }

  std::string to_string() const {
    return is_trivial() ? "trivial" : std::to_string(*level_);
  }

  friend bool operator==(const TruncationLevel&,
                         const TruncationLevel&) = default;

 private:
  std::optional<std::int64_t> level_;
};

/// The k-truncation: its bases are the k-element independent sets of M.
inline FiniteMatroid truncate_to(const FiniteMatroid& m, std::size_t k) {
  const std::size_t r = m.rank();
  if (k > r) {
    throw std::invalid_argument("truncate_to: level " + std::to_string(k) +
                                " exceeds rank " + std::to_string(r));
  }
  if (k == r) return m;
  return FiniteMatroid::truncation_view(m, k);
}

/// The (-n)-truncation, built literally: every base of M with n of its
/// elements removed.
inline FiniteMatroid cotruncate(const FiniteMatroid& m, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("cotruncate: n must be positive");
  }
  const std::size_t r = m.rank();
  if (n > r) {
    throw std::invalid_argument("cotruncate: n = " + std::to_string(n) +
                                " exceeds rank " + std::to_string(r));
  }
  std::vector<Mask> out;
  for (Mask base : m.bases()) {
    // Every submask of the base with exactly r - n elements.
    for_each_submask(base, [&](Mask sub) {
      if (static_cast<std::size_t>(popcount(sub)) == r - n) out.push_back(sub);
    });
  }
  return FiniteMatroid::trusted_bases(m.ground(), std::move(out));
}

inline bool same_bases(const FiniteMatroid& a, const FiniteMatroid& b) {
  return same_matroid(a, b);
}

/// The level k with N equal to the k-truncation of M, if there is one.
/// k = r(M) is reported as trivial.
inline std::optional<TruncationLevel> classify_truncation(
    const FiniteMatroid& m, const FiniteMatroid& n) {
  if (m.ground() != n.ground()) {
    throw std::invalid_argument("classify_truncation: ground sets differ");
  }
  const std::size_t r = m.rank();
  const std::size_t k = n.rank();
  if (k > r) return std::nullopt;
  if (!same_bases(truncate_to(m, k), n)) return std::nullopt;
  if (k == r) return TruncationLevel::trivial();
  return TruncationLevel::of(static_cast<std::int64_t>(k));
}

/// Applies a level as accepted on the command line.
inline FiniteMatroid apply_level(const FiniteMatroid& m, TruncationLevel t) {
  if (t.is_trivial()) return m;
  if (t.level() >= 0) return truncate_to(m, static_cast<std::size_t>(t.level()));
  return cotruncate(m, static_cast<std::size_t>(-t.level()));
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_TRUNCATION_HPP_
