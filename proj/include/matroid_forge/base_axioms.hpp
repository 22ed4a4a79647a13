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

#ifndef MATROID_FORGE_BASE_AXIOMS_HPP_
#define MATROID_FORGE_BASE_AXIOMS_HPP_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matroid_forge/sets.hpp"

namespace matroid_forge {

// A failed rule together with the data that demonstrates the failure.
// The meaning of `sets` depends on the rule:
//   B1   -> {}
//   B2   -> {B0, B1}, element = x
//   BM   -> {X, X ∩ B}   (an intersection with no maximal one above it)
//   1    -> {} for an empty family, {B} for a dependent member
//   2    -> {B, B'}      (B' independent, |B'| = |B|, B' missing)
//   3    -> {B, B', S}   (S a proper subset of B spanning B')
//   4    -> {I, J}
//   I    -> {E(M), E(N)}
//   II   -> {X}          (N-independent, M-dependent)
//   III  -> {I}, element = e
struct Violation {
  std::string rule;
  std::vector<ElementSet> sets;
  std::optional<Element> element;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class Verdict {
 public:
  static Verdict ok() { return Verdict(); }
  static Verdict fail(Violation v) {
    Verdict out;
    out.violation_ = std::move(v);
    return out;
  }

  bool is_ok() const { return !violation_.has_value(); }
  const Violation& violation() const { return violation_.value(); }

  std::string to_string() const {
    if (is_ok()) return "ok";
    std::string out = "violation(" + violation_->rule;
    for (const auto& s : violation_->sets) out += ", " + matroid_forge::to_string(s);
    if (violation_->element) out += ", e=" + std::to_string(*violation_->element);
    return out + ")";
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  std::optional<Violation> violation_;
};

inline constexpr std::size_t kBaseAxiomBound = 12;

namespace detail {

inline ElementSet set_from_mask(const std::vector<Element>& ground, Mask m) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if ((m >> i) & 1U) out.push_back(ground[i]);
  }
  return ElementSet(std::move(out));
}

inline Mask mask_from_set(const std::vector<Element>& ground,
                          const ElementSet& s) {
  Mask m = 0;
  for (Element e : s) {
    auto it = std::lower_bound(ground.begin(), ground.end(), e);
    if (it == ground.end() || *it != e) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " is not in the ground set");
    }
    m |= Mask{1} << static_cast<unsigned>(it - ground.begin());
  }
  return m;
}

inline bool contains_mask(const std::vector<Mask>& sorted, Mask m) {
  return std::binary_search(sorted.begin(), sorted.end(), m);
}

}  // namespace detail

/// Literal check of (B1), (B2) and (BM) for `family` as a base family on
/// `ground`. Exhaustive, so |ground| is limited to kBaseAxiomBound
/// (possibly lowered by MATROID_FORGE_MAX_GROUND); larger inputs are refused.
///
/// Witness order is deterministic: members are scanned in ascending mask
/// order, the outer loop running over B1 and the inner over B0, with x
/// ascending.
inline Verdict check_base_axioms(const ElementSet& ground,
                                 const SetFamily& family) {
  const std::size_t bound = exhaustive_bound(kBaseAxiomBound);
  if (ground.size() > bound) {
    throw std::out_of_range("check_base_axioms: |ground| = " +
                            std::to_string(ground.size()) +
                            " exceeds the exhaustive bound " +
                            std::to_string(bound));
  }
  const std::vector<Element>& g = ground.items();
  std::vector<Mask> bases;
  bases.reserve(family.size());
  for (const auto& b : family) bases.push_back(detail::mask_from_set(g, b));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  if (bases.empty()) return Verdict::fail({"B1", {}, std::nullopt});

  for (Mask b1 : bases) {
    for (Mask b0 : bases) {
      Mask only0 = b0 & ~b1;
      Mask only1 = b1 & ~b0;
      for (Mask xs = only0; xs != 0; xs &= xs - 1) {
        Mask x = xs & (~xs + 1);
        bool exchanged = false;
        for (Mask ys = only1; ys != 0 && !exchanged; ys &= ys - 1) {
          Mask y = ys & (~ys + 1);
          exchanged = detail::contains_mask(bases, (b0 & ~x) | y);
        }
        if (!exchanged) {
          Element xe = g[static_cast<std::size_t>(std::countr_zero(x))];
          return Verdict::fail({"B2",
                                {detail::set_from_mask(g, b0),
                                 detail::set_from_mask(g, b1)},
                                xe});
        }
      }
    }
  }

  // (BM): for every X the maximal traces X ∩ B are cofinal among all traces.
  const Mask full = low_bits(g.size());
  std::vector<Mask> traces;
  std::vector<Mask> maximal;
  for (Mask x = full;; x = (x - 1) & full) {
    traces.clear();
    for (Mask b : bases) traces.push_back(b & x);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    maximal.clear();
    for (Mask t : traces) {
      bool is_max = std::none_of(traces.begin(), traces.end(), [t](Mask u) {
        return u != t && is_submask(t, u);
      });
      if (is_max) maximal.push_back(t);
    }
    for (Mask t : traces) {
      bool covered = std::any_of(maximal.begin(), maximal.end(),
                                 [t](Mask u) { return is_submask(t, u); });
      if (!covered) {
        return Verdict::fail({"BM",
                              {detail::set_from_mask(g, x),
                               detail::set_from_mask(g, t)},
                              std::nullopt});
      }
    }
    if (x == 0) break;
  }
  return Verdict::ok();
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_BASE_AXIOMS_HPP_
