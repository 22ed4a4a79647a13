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

#ifndef MATROID_FORGE_EQUIVALENCE_HPP_
#define MATROID_FORGE_EQUIVALENCE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "matroid_forge/finitary_matroid.hpp"
#include "matroid_forge/finite_matroid.hpp"
#include "matroid_forge/sets.hpp"
#include "matroid_forge/template_set.hpp"

namespace matroid_forge {

/// Label of the strong-equivalence class of an independent set.
class ClassLabel {
 public:
  enum class Kind { kFinite, kCofinite, kWildCandidate };

  static ClassLabel finite(std::uint64_t size) {
    return ClassLabel(Kind::kFinite, size);
  }
  static ClassLabel cofinite(std::uint64_t corank) {
    return ClassLabel(Kind::kCofinite, corank);
  }
  static ClassLabel wild_candidate() {
    return ClassLabel(Kind::kWildCandidate, 0);
  }

  Kind kind() const { return kind_; }
  std::uint64_t value() const { return value_; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::kFinite:
        return "finite(" + std::to_string(value_) + ")";
      case Kind::kCofinite:
        return "cofinite(" + std::to_string(value_) + ")";
      case Kind::kWildCandidate:
        break;
    }
    return "wild-candidate";
  }

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;

 private:
  ClassLabel(Kind kind, std::uint64_t value) : kind_(kind), value_(value) {}

  Kind kind_;
  std::uint64_t value_;
};

// ---------------------------------------------------------------------------
// Finite matroids. Every relative rank is finite, so almost-spanning always
// holds and strong equivalence reduces to a size comparison.

namespace detail {

inline void require_independent(const FiniteMatroid& m, const ElementSet& s) {
  if (!m.is_independent(s)) {
    throw std::invalid_argument("set " + to_string(s) + " is not independent");
  }
}

}  // namespace detail

inline bool almost_spans(const FiniteMatroid& m, const ElementSet& i,
                         const ElementSet& j) {
  detail::require_independent(m, i);
  detail::require_independent(m, j);
  return true;
}

inline bool strongly_equivalent(const FiniteMatroid& m, const ElementSet& i,
                                const ElementSet& j) {
  detail::require_independent(m, i);
  detail::require_independent(m, j);
  return i.minus(j).size() == j.minus(i).size();
}

inline ClassLabel classify_class(const FiniteMatroid& m, const ElementSet& i) {
  detail::require_independent(m, i);
  return ClassLabel::finite(i.size());
}

/// Whether r(X | I) = r(X | J), for I ∪ J ⊆ X.
inline bool relative_rank_difference_check(const FiniteMatroid& m,
                                           const ElementSet& i,
                                           const ElementSet& j,
                                           const ElementSet& x) {
  if (!i.unite(j).is_subset_of(x)) {
    throw std::invalid_argument(
        "relative_rank_difference_check: I ∪ J is not inside X");
  }
  return m.relative_rank(x, i) == m.relative_rank(x, j);
}

// ---------------------------------------------------------------------------
// Finitary matroids.

/// A set certified independent in a particular finitary matroid.
class IndepSet {
 public:
  static IndepSet certify(const FinitaryMatroid& mf, TemplateSet carrier) {
    if (!mf.is_independent(carrier)) {
      throw std::invalid_argument("set " + carrier.to_string() +
                                  " is not independent");
    }
    return IndepSet(std::move(carrier), mf.signature());
  }
  static IndepSet certify(const FinitaryMatroid& mf, const ElementSet& s) {
    return certify(mf, TemplateSet::finite(s));
  }

  const TemplateSet& set() const { return set_; }
  const std::string& owner() const { return owner_; }

  void require_owner(const FinitaryMatroid& mf) const {
    if (owner_ != mf.signature()) {
      throw std::invalid_argument(
          "independent set was certified against a different matroid");
    }
  }

  friend bool operator==(const IndepSet&, const IndepSet&) = default;

 private:
  IndepSet(TemplateSet set, std::string owner)
      : set_(std::move(set)), owner_(std::move(owner)) {}

  TemplateSet set_;
  std::string owner_;
};

inline ExtendedNat relative_rank(const FinitaryMatroid& mf, const IndepSet& x,
                                 const IndepSet& y) {
  x.require_owner(mf);
  y.require_owner(mf);
  return mf.relative_rank(x.set(), y.set());
}

/// I ⊴ J: r(I | J) is finite.
inline bool almost_spans(const FinitaryMatroid& mf, const IndepSet& i,
                         const IndepSet& j) {
  return relative_rank(mf, i, j).is_finite();
}

/// I ~ J. With I \ J finite the class test is |I \ J| = |J \ I|; otherwise
/// r(X | I) = r(X | J) < ∞ for X = I ∪ J.
inline bool strongly_equivalent(const FinitaryMatroid& mf, const IndepSet& i,
                                const IndepSet& j) {
  i.require_owner(mf);
  j.require_owner(mf);
  const ExtendedNat i_only = i.set().minus(j.set()).cardinality();
  if (i_only.is_finite()) {
    return i_only == j.set().minus(i.set()).cardinality();
  }
  const TemplateSet x = i.set().unite(j.set());
  const ExtendedNat over_i = mf.relative_rank(x, i.set());
  const ExtendedNat over_j = mf.relative_rank(x, j.set());
  return over_i.is_finite() && over_i == over_j;
}

inline ClassLabel classify_class(const FinitaryMatroid& mf, const IndepSet& i) {
  i.require_owner(mf);
  const ExtendedNat size = i.set().cardinality();
  if (size.is_finite()) return ClassLabel::finite(size.value());
  const ExtendedNat corank = mf.relative_rank(TemplateSet::all(), i.set());
  if (corank.is_finite()) return ClassLabel::cofinite(corank.value());
  return ClassLabel::wild_candidate();
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_EQUIVALENCE_HPP_
