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

#ifndef MATROID_FORGE_FINITARY_MATROID_HPP_
#define MATROID_FORGE_FINITARY_MATROID_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matroid_forge/finite_matroid.hpp"
#include "matroid_forge/sets.hpp"
#include "matroid_forge/template_set.hpp"

namespace matroid_forge {

// Component matroids of a periodic direct sum are limited to this many
// elements (per-component searches enumerate all local subsets).
inline constexpr std::size_t kComponentBound = 16;

/// How a finite collection of templates sits on the components of a
/// periodic direct sum. Components c >= first_regular look identical
/// whenever their indices agree mod `types`; earlier ones are listed
/// individually.
struct ComponentLayout {
  std::uint64_t component_size = 1;
  std::uint64_t period = 1;  // lcm of the component size and all periods
  std::uint64_t types = 1;   // period / component_size
  std::uint64_t first_regular = 0;

  // The smallest regular component of the given type.
  std::uint64_t representative(std::uint64_t type) const {
    std::uint64_t c = first_regular;
    return c + (type + types - c % types) % types;
  }
};

/// A countable matroid on the naturals: the free matroid, or a periodic
/// direct sum of copies of a finite matroid M0, where element n is position
/// n mod |E(M0)| of component n div |E(M0)|.
class FinitaryMatroid {
 public:
  static FinitaryMatroid free() {
    FinitaryMatroid m(FiniteMatroid::uniform(1, 1));
    m.free_ = true;
    m.signature_ = "free";
    return m;
  }

  static FinitaryMatroid periodic_direct_sum(const FiniteMatroid& m0) {
    if (m0.size() == 0) {
      throw std::invalid_argument("direct sum needs a nonempty component");
    }
    if (m0.size() > kComponentBound) {
      throw std::invalid_argument("direct-sum components are limited to " +
                                  std::to_string(kComponentBound) +
                                  " elements");
    }
    if (m0.rank() == 0) {
      throw std::invalid_argument(
          "direct sum of a rank-0 matroid has finite rank");
    }
    return FinitaryMatroid(m0);
  }

  bool is_free() const { return free_; }
  const FiniteMatroid& component() const { return component_; }
  std::uint64_t component_size() const { return component_.size(); }

  /// Identifies the schema; sets certified against one matroid are refused
  /// by another with a different signature.
  const std::string& signature() const { return signature_; }

  std::uint64_t component_of(Element n) const { return n / component_size(); }
  std::uint64_t position_of(Element n) const { return n % component_size(); }
  Element element_at(std::uint64_t component, std::uint64_t position) const {
    return component * component_size() + position;
  }

  Mask local_mask(const TemplateSet& t, std::uint64_t component) const {
    Mask out = 0;
    for (std::uint64_t i = 0; i < component_size(); ++i) {
      if (t.contains(element_at(component, i))) out |= Mask{1} << i;
    }
    return out;
  }

  ComponentLayout layout(std::initializer_list<const TemplateSet*> sets) const {
    return layout(std::vector<const TemplateSet*>(sets));
  }
  ComponentLayout layout(const std::vector<const TemplateSet*>& sets) const {
    ComponentLayout l;
    l.component_size = component_size();
    l.period = l.component_size;
    std::uint64_t top = 0;
    for (const TemplateSet* t : sets) {
      l.period = std::lcm(l.period, t->period());
      if (l.period > kTemplateLimit) {
        throw std::out_of_range("combined period too large");
      }
      top = std::max(top, t->threshold());
    }
    l.types = l.period / l.component_size;
    l.first_regular = (top + l.component_size - 1) / l.component_size;
    return l;
  }

  /// The template whose trace on component c is choose(c); choose must be
  /// constant on regular components of equal type, and only
  /// representatives are queried for those.
  TemplateSet build_template(
      const ComponentLayout& l,
      const std::function<Mask(std::uint64_t)>& choose) const {
    std::vector<Element> low;
    for (std::uint64_t c = 0; c < l.first_regular; ++c) {
      Mask m = choose(c);
      for (std::uint64_t i = 0; i < l.component_size; ++i) {
        if ((m >> i) & 1U) low.push_back(element_at(c, i));
      }
    }
    std::vector<std::uint64_t> residues;
    for (std::uint64_t type = 0; type < l.types; ++type) {
      Mask m = choose(l.representative(type));
      for (std::uint64_t i = 0; i < l.component_size; ++i) {
        if ((m >> i) & 1U) residues.push_back(type * l.component_size + i);
      }
    }
    return TemplateSet(l.period, residues, l.first_regular * l.component_size,
                       ElementSet(std::move(low)));
  }

  bool is_independent(const ElementSet& x) const {
    if (free_) return true;
    std::vector<std::pair<std::uint64_t, Mask>> traces;
    for (Element e : x) {
      std::uint64_t c = component_of(e);
      Mask bit = Mask{1} << position_of(e);
      if (!traces.empty() && traces.back().first == c) {
        traces.back().second |= bit;
      } else {
        traces.emplace_back(c, bit);
      }
    }
    return std::all_of(traces.begin(), traces.end(), [&](const auto& tr) {
      return component_.is_independent(tr.second);
    });
  }

  /// Independence of an infinite set, decided from its finitely many
  /// distinct component traces.
  bool is_independent(const TemplateSet& t) const {
    if (free_) return true;
    const ComponentLayout l = layout({&t});
    for (std::uint64_t c = 0; c < l.first_regular; ++c) {
      if (!component_.is_independent(local_mask(t, c))) return false;
    }
    for (std::uint64_t type = 0; type < l.types; ++type) {
      if (!component_.is_independent(local_mask(t, l.representative(type)))) {
        return false;
      }
    }
    return true;
  }

  /// r(X | Y) for arbitrary X, Y; infinite when infinitely many
  /// components contribute.
  ExtendedNat relative_rank(const TemplateSet& x, const TemplateSet& y) const {
    if (free_) return x.minus(y).cardinality();
    const ComponentLayout l = layout({&x, &y});
    for (std::uint64_t type = 0; type < l.types; ++type) {
      const std::uint64_t c = l.representative(type);
      if (local_relative_rank(local_mask(x, c), local_mask(y, c)) > 0) {
        return ExtendedNat::infinity();
      }
    }
    std::uint64_t total = 0;
    for (std::uint64_t c = 0; c < l.first_regular; ++c) {
      total += local_relative_rank(local_mask(x, c), local_mask(y, c));
    }
    return ExtendedNat(total);
  }
  ExtendedNat relative_rank(const ElementSet& x, const TemplateSet& y) const {
    return relative_rank(TemplateSet::finite(x), y);
  }

  /// r(X ∪ K) - r(K) restricted to one component.
  std::size_t local_relative_rank(Mask x, Mask k) const {
    return component_.rank(x | k) - component_.rank(k);
  }

  /// Greedy (ascending ids) maximal subset of `candidates` \ `contracted`
  /// that is independent in M / contracted.
  TemplateSet greedy_independent_subset(const TemplateSet& candidates,
                                        const TemplateSet& contracted) const {
    const ComponentLayout l = layout({&candidates, &contracted});
    return build_template(l, [&](std::uint64_t c) {
      const Mask k = local_mask(contracted, c);
      const Mask cand = local_mask(candidates, c) & ~k;
      Mask chosen = 0;
      std::size_t base_rank = component_.rank(k);
      for (Mask rest = cand; rest != 0; rest &= rest - 1) {
        Mask bit = rest & (~rest + 1);
        if (component_.rank(chosen | bit | k) == base_rank + popcount(chosen) + 1) {
          chosen |= bit;
        }
      }
      return chosen;
    });
  }

  TemplateSet canonical_base() const {
    return greedy_independent_subset(TemplateSet::all(), TemplateSet::empty());
  }

  /// The restriction to {0, ..., n-1} as a finite matroid with the same
  /// element ids, built from an independent backend (a uniform matroid for
  /// the free schema, a disjoint-union graph or block-diagonal matrix for
  /// direct sums) rather than from the component rank function.
  FiniteMatroid prefix_restriction(std::size_t n) const {
    if (n > kMaxGround) {
      throw std::invalid_argument("prefix restriction is limited to 64");
    }
    std::vector<Element> ids(n);
    std::iota(ids.begin(), ids.end(), Element{0});
    if (free_) return FiniteMatroid::uniform(n, n).relabeled(ids);

    if (n == 0) return FiniteMatroid::uniform(0, 0);
    return disjoint_copies(n).relabeled(ids);
  }

 private:
  explicit FinitaryMatroid(FiniteMatroid m0) : component_(std::move(m0)) {
    signature_ = "periodic-direct-sum:" + std::to_string(component_.size());
    for (Mask b : component_.bases()) signature_ += ":" + std::to_string(b);
  }

  static std::uint64_t prime_at_least(std::uint64_t n) {
    std::uint64_t p = std::max<std::uint64_t>(n, 2);
    while (!detail::is_prime(p)) ++p;
    return p;
  }

  // The first n elements of a disjoint union of copies of the component.
  FiniteMatroid disjoint_copies(std::size_t n) const {
    const std::size_t m = component_size();
    const std::size_t copies = (n + m - 1) / m;
    const auto desc = component_.describe();
    if (const auto* g = std::get_if<FiniteMatroid::Graphic>(&desc)) {
      std::uint64_t stride = 1;
      for (const auto& [u, v] : g->edges) stride = std::max({stride, u + 1, v + 1});
      std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
      for (std::size_t e = 0; e < n; ++e) {
        const auto [u, v] = g->edges[e % m];
        const std::uint64_t shift = (e / m) * stride;
        edges.emplace_back(u + shift, v + shift);
      }
      return FiniteMatroid::graphic(std::move(edges));
    }
    FiniteMatroid::Linear block;
    if (const auto* lin = std::get_if<FiniteMatroid::Linear>(&desc)) {
      block = *lin;
    } else if (const auto* u = std::get_if<FiniteMatroid::Uniform>(&desc)) {
      if (u->k == 0) {
        // All loops.
        std::vector<std::pair<std::uint64_t, std::uint64_t>> loops(n, {0, 0});
        return FiniteMatroid::graphic(std::move(loops));
      }
      // Vandermonde columns (1, x, ..., x^(k-1)) over a prime field with at
      // least m distinct points realise U_{k,m}.
      block.prime = prime_at_least(m);
      block.rows.assign(u->k, std::vector<std::uint64_t>(m));
      for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t r = 0; r < u->k; ++r) {
          block.rows[r][x] = detail::pow_mod(x, r, block.prime);
        }
      }
    } else {
      throw std::invalid_argument(
          "prefix restriction has no independent backend for explicit "
          "components");
    }
    if (block.rows.empty()) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> loops(n, {0, 0});
      return FiniteMatroid::graphic(std::move(loops));
    }
    const std::size_t rows = block.rows.size();
    FiniteMatroid::Linear sum{block.prime,
                              std::vector<std::vector<std::uint64_t>>(
                                  rows * copies,
                                  std::vector<std::uint64_t>(n, 0))};
    for (std::size_t e = 0; e < n; ++e) {
      const std::size_t c = e / m;
      for (std::size_t r = 0; r < rows; ++r) {
        sum.rows[c * rows + r][e] = block.rows[r][e % m];
      }
    }
    return FiniteMatroid::linear(sum.prime, std::move(sum.rows));
  }

  FiniteMatroid component_;
  bool free_ = false;
  std::string signature_;
};

}  // namespace matroid_forge

#endif  // MATROID_FORGE_FINITARY_MATROID_HPP_
