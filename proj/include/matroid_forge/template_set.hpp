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

#ifndef MATROID_FORGE_TEMPLATE_SET_HPP_
#define MATROID_FORGE_TEMPLATE_SET_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matroid_forge/sets.hpp"

namespace matroid_forge {

// Periods and thresholds beyond this are refused; every operation walks
// them explicitly.
inline constexpr std::uint64_t kTemplateLimit = std::uint64_t{1} << 24;

/// An eventually periodic set of naturals:
///   { n >= t : n mod d in residues } ∪ low.
/// Values are kept canonical (least period, then least threshold, `low`
/// holding exactly the members below t), so == is set equality.
class TemplateSet {
 public:
  TemplateSet() : TemplateSet(1, {}, 0, {}, {}) {}

  /// { n >= t : n mod d in residues } ∪ low, minus the `minus` elements.
  TemplateSet(std::uint64_t d, const std::vector<std::uint64_t>& residues,
              std::uint64_t t, const ElementSet& low,
              const ElementSet& minus = {}) {
    if (d == 0) throw std::invalid_argument("template period must be positive");
    if (d > kTemplateLimit) throw std::out_of_range("template period too large");
    pattern_.assign(d, false);
    for (std::uint64_t r : residues) {
      if (r >= d) {
        throw std::invalid_argument("template residue " + std::to_string(r) +
                                    " is not below the period " +
                                    std::to_string(d));
      }
      pattern_[r] = true;
    }
    std::uint64_t top = t;
    for (Element e : low) top = std::max<std::uint64_t>(top, e + 1);
    for (Element e : minus) top = std::max<std::uint64_t>(top, e + 1);
    if (top > kTemplateLimit) {
      throw std::out_of_range("template threshold too large");
    }
    threshold_ = top;
    for (std::uint64_t n = 0; n < top; ++n) {
      bool in = (n >= t && pattern_[n % d]) || low.contains(n);
      if (in && !minus.contains(n)) low_.push_back(n);
    }
    canonicalize();
  }

  static TemplateSet empty() { return TemplateSet(); }
  static TemplateSet all() { return TemplateSet(1, {0}, 0, {}); }
  static TemplateSet evens() { return TemplateSet(2, {0}, 0, {}); }
  static TemplateSet odds() { return TemplateSet(2, {1}, 0, {}); }
  /// { n : n ≡ offset (mod k) }.
  static TemplateSet multiples(std::uint64_t k, std::uint64_t offset = 0) {
    if (k == 0) throw std::invalid_argument("mult needs a positive modulus");
    if (offset >= k) {
      throw std::invalid_argument("mult offset must be below the modulus");
    }
    return TemplateSet(k, {offset}, 0, {});
  }
  static TemplateSet finite(const ElementSet& s) {
    return TemplateSet(1, {}, 0, s);
  }

  std::uint64_t period() const { return pattern_.size(); }
  std::uint64_t threshold() const { return threshold_; }
  std::vector<std::uint64_t> residues() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < pattern_.size(); ++r) {
      if (pattern_[r]) out.push_back(r);
    }
    return out;
  }
  ElementSet low() const { return ElementSet(low_); }

  bool contains(Element n) const {
    if (n < threshold_) return std::binary_search(low_.begin(), low_.end(), n);
    return pattern_[n % pattern_.size()];
  }
  // True for every n >= threshold() whose residue is in the pattern.
  bool in_pattern(std::uint64_t residue) const {
    return pattern_[residue % pattern_.size()];
  }

  bool is_infinite() const {
    return std::find(pattern_.begin(), pattern_.end(), true) != pattern_.end();
  }
  bool is_empty() const { return !is_infinite() && low_.empty(); }
  ExtendedNat cardinality() const {
    if (is_infinite()) return ExtendedNat::infinity();
    return ExtendedNat(low_.size());
  }

  TemplateSet unite(const TemplateSet& o) const {
    return combine(o, [](bool a, bool b) { return a || b; });
  }
  TemplateSet intersect(const TemplateSet& o) const {
    return combine(o, [](bool a, bool b) { return a && b; });
  }
  TemplateSet minus(const TemplateSet& o) const {
    return combine(o, [](bool a, bool b) { return a && !b; });
  }
  TemplateSet patch(const ElementSet& add, const ElementSet& remove) const {
    return unite(finite(add)).minus(finite(remove));
  }
  bool is_subset_of(const TemplateSet& o) const { return minus(o).is_empty(); }
  bool is_disjoint_from(const TemplateSet& o) const {
    return intersect(o).is_empty();
  }

  std::optional<Element> next_at_or_after(Element n) const {
    for (; n < threshold_; ++n) {
      if (contains(n)) return n;
    }
    for (std::uint64_t i = 0; i < pattern_.size(); ++i) {
      if (pattern_[(n + i) % pattern_.size()]) return n + i;
    }
    return std::nullopt;
  }

  /// The k smallest members (fewer if the set is finite and smaller).
  std::vector<Element> first_elements(std::size_t k) const {
    std::vector<Element> out;
    Element n = 0;
    while (out.size() < k) {
      auto next = next_at_or_after(n);
      if (!next) break;
      out.push_back(*next);
      n = *next + 1;
    }
    return out;
  }

  ElementSet elements_below(Element bound) const {
    std::vector<Element> out;
    for (Element n = 0; n < bound; ++n) {
      if (contains(n)) out.push_back(n);
    }
    return ElementSet(std::move(out));
  }

  std::optional<ElementSet> as_finite() const {
    if (is_infinite()) return std::nullopt;
    return ElementSet(low_);
  }

  /// `template d=<d> res=<r,...> t=<t>` plus `low=<...>` when nonempty.
  std::string to_string() const {
    std::string out = "template d=" + std::to_string(period()) + " res=";
    out += join(residues());
    out += " t=" + std::to_string(threshold_);
    if (!low_.empty()) out += " low=" + join(low_);
    return out;
  }

  friend bool operator==(const TemplateSet&, const TemplateSet&) = default;

 private:
  static std::string join(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(v[i]);
    }
    return out;
  }

  template <class Op>
  TemplateSet combine(const TemplateSet& o, Op op) const {
    const std::uint64_t d = std::lcm(period(), o.period());
    if (d > kTemplateLimit) {
      throw std::out_of_range("template period lcm too large");
    }
    TemplateSet out;
    out.threshold_ = std::max(threshold_, o.threshold_);
    out.pattern_.assign(d, false);
    for (std::uint64_t r = 0; r < d; ++r) {
      out.pattern_[r] = op(in_pattern(r), o.in_pattern(r));
    }
    for (std::uint64_t n = 0; n < out.threshold_; ++n) {
      if (op(contains(n), o.contains(n))) out.low_.push_back(n);
    }
    out.canonicalize();
    return out;
  }

  void canonicalize() {
    const std::uint64_t d = pattern_.size();
    for (std::uint64_t p = 1; p < d; ++p) {
      if (d % p != 0) continue;
      bool periodic = true;
      for (std::uint64_t r = p; r < d && periodic; ++r) {
        periodic = pattern_[r] == pattern_[r - p];
      }
      if (periodic) {
        pattern_.resize(p);
        break;
      }
    }
    while (threshold_ > 0) {
      const std::uint64_t n = threshold_ - 1;
      const bool listed = !low_.empty() && low_.back() == n;
      if (listed != pattern_[n % pattern_.size()]) break;
      if (listed) low_.pop_back();
      threshold_ = n;
    }
  }

  std::vector<bool> pattern_;
  std::uint64_t threshold_ = 0;
  std::vector<Element> low_;
};

}  // namespace matroid_forge

#endif  // MATROID_FORGE_TEMPLATE_SET_HPP_
