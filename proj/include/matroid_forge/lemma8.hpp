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

#ifndef MATROID_FORGE_LEMMA8_HPP_
#define MATROID_FORGE_LEMMA8_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "matroid_forge/finitary_matroid.hpp"
#include "matroid_forge/sets.hpp"
#include "matroid_forge/template_set.hpp"

namespace matroid_forge {

namespace detail {

inline void require_contracted_independent(const FinitaryMatroid& mf,
                                           const TemplateSet& k,
                                           const TemplateSet& x,
                                           const char* name) {
  if (!x.is_disjoint_from(k) || !mf.is_independent(x.unite(k))) {
    throw std::invalid_argument(std::string("lemma8: ") + name +
                                " is not independent in the contraction");
  }
}

}  // namespace detail

/// A finite J'' ⊆ J \ Jp with r(I | (J \ J'') ∪ K) >= n, where I and J are
/// infinite and independent in M / K (K itself independent). With K empty
/// this is the plain statement in M.
///
/// If I ∩ J is infinite, J'' is the n smallest elements of (I ∩ J) \ Jp.
/// Otherwise Jp is contracted along with K, n elements e of a greedy
/// M/(K ∪ Jp)-independent part of I \ J are chosen, and each is paired
/// with an f in J whose removal keeps (J \ {f...}) ∪ {e...} independent:
/// the least element of J \ I on the circuit that e closes, or the least
/// remaining element of J \ I when there is no such circuit.
inline ElementSet lemma8_witness_over(const FinitaryMatroid& mf,
                                      const TemplateSet& k,
                                      const TemplateSet& i,
                                      const TemplateSet& j,
                                      const ElementSet& jp, std::size_t n) {
  if (!mf.is_independent(k)) {
    throw std::invalid_argument("lemma8: contracted set is dependent");
  }
  detail::require_contracted_independent(mf, k, i, "I");
  detail::require_contracted_independent(mf, k, j, "J");
  if (!i.is_infinite() || !j.is_infinite()) {
    throw std::invalid_argument("lemma8: I and J must be infinite");
  }
  const TemplateSet jp_set = TemplateSet::finite(jp);
  if (!jp_set.is_subset_of(j)) {
    throw std::invalid_argument("lemma8: J' is not a subset of J");
  }
  if (n == 0) return {};

  const TemplateSet common = i.intersect(j);
  if (common.is_infinite()) {
    return ElementSet(common.minus(jp_set).first_elements(n));
  }

  const TemplateSet contracted = k.unite(jp_set);
  const TemplateSet rest_j = j.minus(jp_set);
  const TemplateSet i_reduced =
      mf.greedy_independent_subset(i.minus(jp_set), contracted);
  const std::vector<Element> es = i_reduced.minus(j).first_elements(n);
  if (es.size() < n) {
    throw std::logic_error("lemma8: reduced I is unexpectedly finite");
  }

  std::vector<Element> fs;
  std::vector<Element> chosen;
  const std::uint64_t size = mf.component_size();
  for (Element e : es) {
    const TemplateSet live_j = rest_j.minus(TemplateSet::finite(ElementSet(fs)));
    const std::uint64_t c = mf.component_of(e);
    Mask w = mf.local_mask(contracted, c) | mf.local_mask(live_j, c);
    for (Element x : chosen) {
      if (mf.component_of(x) == c) w |= Mask{1} << mf.position_of(x);
    }
    const Mask e_bit = Mask{1} << mf.position_of(e);
    const FiniteMatroid& m0 = mf.component();
    std::optional<Element> f;
    if (!m0.is_independent(w | e_bit)) {
      // The circuit of w + e: elements whose removal restores independence.
      const Mask candidates = mf.local_mask(live_j, c);
      std::optional<Element> fallback;
      for (std::uint64_t pos = 0; pos < size && !f; ++pos) {
        const Mask bit = Mask{1} << pos;
        if ((candidates & bit) == 0) continue;
        if (!m0.is_independent((w | e_bit) & ~bit)) continue;
        const Element x = mf.element_at(c, pos);
        if (!i.contains(x)) {
          f = x;
        } else if (!fallback) {
          fallback = x;
        }
      }
      if (!f) f = fallback;
      if (!f) throw std::logic_error("lemma8: no exchange element found");
    } else {
      f = live_j.minus(i).next_at_or_after(0);
      if (!f) throw std::logic_error("lemma8: J \\ I is exhausted");
    }
    fs.push_back(*f);
    chosen.push_back(e);
  }
  return ElementSet(std::move(fs));
}

inline ElementSet lemma8_witness(const FinitaryMatroid& mf,
                                 const TemplateSet& i, const TemplateSet& j,
                                 const ElementSet& jp, std::size_t n) {
  return lemma8_witness_over(mf, TemplateSet::empty(), i, j, jp, n);
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_LEMMA8_HPP_
