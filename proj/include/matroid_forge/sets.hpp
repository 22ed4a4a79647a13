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

#ifndef MATROID_FORGE_SETS_HPP_
#define MATROID_FORGE_SETS_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matroid_forge {

using Element = std::uint64_t;

// Subset of a finite ground set, bit i standing for the i-th smallest
// ground element.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGround = 64;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask low_bits(std::size_t n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline bool is_submask(Mask sub, Mask super) { return (sub & ~super) == 0; }

/// Sorted, duplicate-free set of element ids.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<Element> items) : items_(items) {
    normalize();
  }
  explicit ElementSet(std::vector<Element> items) : items_(std::move(items)) {
    normalize();
  }

  bool contains(Element e) const {
    return std::binary_search(items_.begin(), items_.end(), e);
  }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Element>& items() const { return items_; }

  bool is_subset_of(const ElementSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(),
                         items_.begin(), items_.end());
  }

  ElementSet unite(const ElementSet& other) const {
    std::vector<Element> out;
    std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                   other.items_.end(), std::back_inserter(out));
    return ElementSet(std::move(out));
  }
  ElementSet intersect(const ElementSet& other) const {
    std::vector<Element> out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                          other.items_.end(), std::back_inserter(out));
    return ElementSet(std::move(out));
  }
  ElementSet minus(const ElementSet& other) const {
    std::vector<Element> out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(out));
    return ElementSet(std::move(out));
  }
  ElementSet with(Element e) const { return unite(ElementSet{e}); }
  ElementSet without(Element e) const { return minus(ElementSet{e}); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.items_ <=> b.items_;
  }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<Element> items_;
};

using SetFamily = std::vector<ElementSet>;

inline std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    if (!first) out += ", ";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  return os << to_string(s);
}

/// A natural number or infinity; the value type of ranks of possibly
/// infinite sets.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::uint64_t v) : value_(v) {}  // NOLINT

  static constexpr ExtendedNat infinity() {
    ExtendedNat r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_finite() const { return !infinite_; }
  std::uint64_t value() const {
    if (infinite_) throw std::logic_error("value() of an infinite quantity");
    return value_;
  }

  friend constexpr ExtendedNat operator+(ExtendedNat a, ExtendedNat b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedNat(a.value_ + b.value_);
  }
  ExtendedNat& operator+=(ExtendedNat other) { return *this = *this + other; }

  friend constexpr bool operator==(ExtendedNat a, ExtendedNat b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtendedNat a,
                                                    ExtendedNat b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
  }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, ExtendedNat n) {
  return os << n.to_string();
}

/// Exhaustive-search bound, lowered (never raised) by the
/// MATROID_FORGE_MAX_GROUND environment variable.
inline std::size_t exhaustive_bound(std::size_t built_in) {
  const char* env = std::getenv("MATROID_FORGE_MAX_GROUND");
  if (env == nullptr || *env == '\0') return built_in;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') return built_in;
  return std::min<std::size_t>(built_in, static_cast<std::size_t>(v));
}

/// Calls fn(sub) for every submask of `mask`, including 0 and `mask` itself.
template <class Fn>
void for_each_submask(Mask mask, Fn&& fn) {
  Mask sub = mask;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_SETS_HPP_
