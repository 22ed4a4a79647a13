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

#ifndef MATROID_FORGE_FINITE_MATROID_HPP_
#define MATROID_FORGE_FINITE_MATROID_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matroid_forge/base_axioms.hpp"
#include "matroid_forge/sets.hpp"

namespace matroid_forge {

// Largest ground set for which bases / independent sets are listed.
inline constexpr std::size_t kEnumerationBound = 20;

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Rank over GF(p) of the given vectors (all of equal length).
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows,
                              std::uint64_t p) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t inv = pow_mod(rows[rank][col], p - 2, p);
    for (auto& v : rows[rank]) v = mul_mod(v, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t factor = rows[r][col];
      for (std::size_t c = col; c < width; ++c) {
        rows[r][c] = (rows[r][c] + p - mul_mod(factor, rows[rank][c], p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// A matroid on a finite ground set of at most 64 natural-number ids,
/// answering rank and independence queries through one of several
/// backends. Values are immutable; copies share backend state.
class FiniteMatroid {
 public:
  // Backend descriptions as they appear in matroid files. Element ids are
  // 1..n for uniform, edge order 1..m for graphic and column order 1..c for
  // linear matroids.
  struct Uniform {
    std::size_t k = 0;
    std::size_t n = 0;
    friend bool operator==(const Uniform&, const Uniform&) = default;
  };
  struct Graphic {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    friend bool operator==(const Graphic&, const Graphic&) = default;
  };
  struct Linear {
    std::uint64_t prime = 2;
    std::vector<std::vector<std::uint64_t>> rows;
    friend bool operator==(const Linear&, const Linear&) = default;
  };
  struct Explicit {
    ElementSet ground;
    SetFamily bases;
    friend bool operator==(const Explicit&, const Explicit&) = default;
  };
  using Description = std::variant<Uniform, Graphic, Linear, Explicit>;

  static FiniteMatroid construct(const Description& d) {
    return std::visit([](const auto& spec) { return build(spec); }, d);
  }

  static FiniteMatroid uniform(std::size_t k, std::size_t n) {
    return build(Uniform{k, n});
  }
  static FiniteMatroid graphic(
      std::vector<std::pair<std::uint64_t, std::uint64_t>> edges) {
    return build(Graphic{std::move(edges)});
  }
  static FiniteMatroid linear(std::uint64_t prime,
                              std::vector<std::vector<std::uint64_t>> rows) {
    return build(Linear{prime, std::move(rows)});
  }
  static FiniteMatroid explicit_bases(ElementSet ground, SetFamily bases) {
    return build(Explicit{std::move(ground), std::move(bases)});
  }

  // Base family produced by trusted code (truncations, minors); skips the
  // axiom check that user-supplied explicit matroids must pass.
  static FiniteMatroid trusted_bases(std::vector<Element> ground,
                                     std::vector<Mask> bases) {
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    FiniteMatroid m;
    m.ground_ = std::move(ground);
    m.rep_ = BasesRep{std::move(bases)};
    return m;
  }

  // Independent sets are the M-independent sets of size at most k.
  static FiniteMatroid truncation_view(const FiniteMatroid& inner,
                                       std::size_t k) {
    FiniteMatroid m;
    m.ground_ = inner.ground_;
    m.rep_ = TruncationRep{std::make_shared<const FiniteMatroid>(inner), k};
    return m;
  }

  const std::vector<Element>& ground() const { return ground_; }
  ElementSet ground_set() const { return ElementSet(ground_); }
  std::size_t size() const { return ground_.size(); }
  Mask full_mask() const { return low_bits(ground_.size()); }

  bool in_ground(Element e) const {
    return std::binary_search(ground_.begin(), ground_.end(), e);
  }
  std::size_t position_of(Element e) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), e);
    if (it == ground_.end() || *it != e) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " is not in the ground set");
    }
    return static_cast<std::size_t>(it - ground_.begin());
  }

  Mask mask_of(const ElementSet& s) const {
    return detail::mask_from_set(ground_, s);
  }
  ElementSet set_of(Mask m) const { return detail::set_from_mask(ground_, m); }

  std::size_t rank(Mask x) const {
    return std::visit([&](const auto& rep) { return rank_impl(rep, x); }, rep_);
  }
  std::size_t rank(const ElementSet& x) const { return rank(mask_of(x)); }
  std::size_t rank() const { return rank(full_mask()); }

  bool is_independent(Mask x) const {
    if (const auto* b = std::get_if<BasesRep>(&rep_)) {
      return std::any_of(b->bases.begin(), b->bases.end(),
                         [x](Mask base) { return is_submask(x, base); });
    }
    return rank(x) == static_cast<std::size_t>(popcount(x));
  }
  bool is_independent(const ElementSet& x) const {
    return is_independent(mask_of(x));
  }

  // r(X | Y): the rank of X \ Y in the contraction M / Y.
  std::size_t relative_rank(Mask x, Mask y) const {
    return rank(x | y) - rank(y);
  }
  std::size_t relative_rank(const ElementSet& x, const ElementSet& y) const {
    return relative_rank(mask_of(x), mask_of(y));
  }

  bool spans(Mask x, std::size_t position) const {
    return relative_rank(Mask{1} << position, x) == 0;
  }
  bool spans(const ElementSet& x, Element e) const {
    return spans(mask_of(x), position_of(e));
  }

  /// Greedy completion of the independent set `start` inside `within`,
  /// adding elements in ascending id order.
  Mask max_independent_extension(Mask start, Mask within) const {
    if (!is_submask(start, within)) {
      throw std::invalid_argument("extension start is not inside the range");
    }
    if (!is_independent(start)) {
      throw std::invalid_argument("extension start is dependent");
    }
    Mask current = start;
    for (Mask rest = within & ~start; rest != 0; rest &= rest - 1) {
      Mask bit = rest & (~rest + 1);
      if (is_independent(current | bit)) current |= bit;
    }
    return current;
  }
  ElementSet max_independent_extension(const ElementSet& start,
                                       const ElementSet& within) const {
    return set_of(max_independent_extension(mask_of(start), mask_of(within)));
  }

  std::vector<Mask> independent_sets() const {
    require_enumerable("independent_sets");
    std::vector<Mask> out;
    const Mask full = full_mask();
    for (Mask x = 0;; ++x) {
      if (is_independent(x)) out.push_back(x);
      if (x == full) break;
    }
    return out;
  }

  std::vector<Mask> bases() const {
    if (const auto* b = std::get_if<BasesRep>(&rep_)) return b->bases;
    require_enumerable("bases");
    const std::size_t r = rank();
    std::vector<Mask> out;
    const std::size_t n = size();
    if (r == 0) return {0};
    // Gosper's hack over all r-subsets, ascending.
    Mask x = low_bits(r);
    const Mask limit = Mask{1} << n;
    while (x < limit) {
      if (is_independent(x)) out.push_back(x);
      Mask c = x & (~x + 1);
      Mask rr = x + c;
      x = (((rr ^ x) >> 2) / c) | rr;
    }
    return out;
  }

  SetFamily base_family() const {
    SetFamily out;
    for (Mask b : bases()) out.push_back(set_of(b));
    return out;
  }

  /// M \ deleted / contracted on the remaining ground set; its rank function
  /// is X -> r(X ∪ contracted) - r(contracted).
  FiniteMatroid minor(const ElementSet& deleted,
                      const ElementSet& contracted) const {
    const Mask del = mask_of(deleted);
    const Mask con = mask_of(contracted);
    if ((del & con) != 0) {
      throw std::invalid_argument("minor: deleted and contracted overlap");
    }
    if (del == 0 && con == 0) return *this;
    FiniteMatroid m;
    MinorRep rep;
    rep.parent = std::make_shared<const FiniteMatroid>(*this);
    rep.contracted = con;
    rep.contracted_rank = rank(con);
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      if (((del | con) >> i) & 1U) continue;
      m.ground_.push_back(ground_[i]);
      rep.parent_position.push_back(i);
    }
    m.rep_ = std::move(rep);
    return m;
  }

  FiniteMatroid restriction(const ElementSet& keep) const {
    return minor(set_of(full_mask() & ~mask_of(keep)), {});
  }

  /// Same matroid with the i-th ground element renamed to ids[i]; ids must
  /// be strictly increasing.
  FiniteMatroid relabeled(std::vector<Element> ids) const {
    if (ids.size() != ground_.size()) {
      throw std::invalid_argument("relabeled: wrong number of ids");
    }
    if (!std::is_sorted(ids.begin(), ids.end()) ||
        std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      throw std::invalid_argument("relabeled: ids must be strictly increasing");
    }
    FiniteMatroid m = *this;
    m.ground_ = std::move(ids);
    return m;
  }

  /// The file-level description. Uniform, graphic and linear matroids with
  /// their default labels keep their backend; everything else is listed by
  /// its bases.
  Description describe() const {
    if (has_default_labels()) {
      if (const auto* u = std::get_if<UniformRep>(&rep_)) {
        return Uniform{u->k, size()};
      }
      if (const auto* g = std::get_if<GraphicRep>(&rep_)) return g->source;
      if (const auto* l = std::get_if<LinearRep>(&rep_)) return l->source;
    }
    return Explicit{ground_set(), base_family()};
  }

  std::string kind_name() const {
    static constexpr const char* kNames[] = {"uniform", "graphic", "linear",
                                             "explicit", "truncation", "minor"};
    return kNames[rep_.index()];
  }

 private:
  struct UniformRep {
    std::size_t k;
  };
  struct GraphicRep {
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    std::size_t vertices;
    Graphic source;
  };
  struct LinearRep {
    std::uint64_t prime;
    std::vector<std::vector<std::uint64_t>> columns;
    Linear source;
  };
  struct BasesRep {
    std::vector<Mask> bases;
  };
  struct TruncationRep {
    std::shared_ptr<const FiniteMatroid> inner;
    std::size_t k;
  };
  struct MinorRep {
    std::shared_ptr<const FiniteMatroid> parent;
    std::vector<std::size_t> parent_position;
    Mask contracted = 0;
    std::size_t contracted_rank = 0;
  };
  using Rep = std::variant<UniformRep, GraphicRep, LinearRep, BasesRep,
                           TruncationRep, MinorRep>;

  FiniteMatroid() = default;

  static std::vector<Element> default_ground(std::size_t n) {
    if (n > kMaxGround) {
      throw std::invalid_argument("ground sets are limited to 64 elements");
    }
    std::vector<Element> g(n);
    std::iota(g.begin(), g.end(), Element{1});
    return g;
  }

  bool has_default_labels() const {
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      if (ground_[i] != i + 1) return false;
    }
    return true;
  }

  void require_enumerable(const char* what) const {
    const std::size_t bound = exhaustive_bound(kEnumerationBound);
    if (size() > bound) {
      throw std::out_of_range(std::string(what) + ": |ground| = " +
                              std::to_string(size()) + " exceeds bound " +
                              std::to_string(bound));
    }
  }

  static FiniteMatroid build(const Uniform& u) {
    if (u.k > u.n) {
      throw std::invalid_argument("uniform matroid needs 0 <= k <= n");
    }
    FiniteMatroid m;
    m.ground_ = default_ground(u.n);
    m.rep_ = UniformRep{u.k};
    return m;
  }

  static FiniteMatroid build(const Graphic& g) {
    FiniteMatroid m;
    m.ground_ = default_ground(g.edges.size());
    std::vector<std::uint64_t> labels;
    for (const auto& [u, v] : g.edges) {
      labels.push_back(u);
      labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    GraphicRep rep{{}, labels.size(), g};
    auto index = [&](std::uint64_t label) {
      return static_cast<std::size_t>(
          std::lower_bound(labels.begin(), labels.end(), label) -
          labels.begin());
    };
    for (const auto& [u, v] : g.edges) rep.ends.emplace_back(index(u), index(v));
    m.rep_ = std::move(rep);
    return m;
  }

  static FiniteMatroid build(const Linear& l) {
    if (!detail::is_prime(l.prime)) {
      throw std::invalid_argument("linear matroid needs a prime modulus, got " +
                                  std::to_string(l.prime));
    }
    if (l.prime >= (std::uint64_t{1} << 62)) {
      throw std::invalid_argument("linear matroid modulus is too large");
    }
    const std::size_t cols = l.rows.empty() ? 0 : l.rows.front().size();
    for (const auto& row : l.rows) {
      if (row.size() != cols) {
        throw std::invalid_argument("linear matroid rows differ in length");
      }
    }
    FiniteMatroid m;
    m.ground_ = default_ground(cols);
    LinearRep rep{l.prime, std::vector<std::vector<std::uint64_t>>(cols), l};
    for (std::size_t c = 0; c < cols; ++c) {
      for (const auto& row : l.rows) rep.columns[c].push_back(row[c] % l.prime);
    }
    m.rep_ = std::move(rep);
    return m;
  }

  static FiniteMatroid build(const Explicit& e) {
    if (e.bases.empty()) {
      throw std::invalid_argument("explicit matroid needs at least one base");
    }
    if (e.ground.size() > kMaxGround) {
      throw std::invalid_argument("ground sets are limited to 64 elements");
    }
    for (const auto& b : e.bases) {
      if (!b.is_subset_of(e.ground)) {
        throw std::invalid_argument("base " + to_string(b) +
                                    " is not inside the ground set");
      }
    }
    Verdict v = check_base_axioms(e.ground, e.bases);
    if (!v.is_ok()) {
      throw std::invalid_argument("explicit bases are not a matroid: " +
                                  v.to_string());
    }
    std::vector<Mask> masks;
    for (const auto& b : e.bases) {
      masks.push_back(detail::mask_from_set(e.ground.items(), b));
    }
    return trusted_bases(e.ground.items(), std::move(masks));
  }

  std::size_t rank_impl(const UniformRep& u, Mask x) const {
    return std::min<std::size_t>(u.k, static_cast<std::size_t>(popcount(x)));
  }

  std::size_t rank_impl(const GraphicRep& g, Mask x) const {
    std::vector<std::size_t> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::size_t joined = 0;
    for (Mask rest = x; rest != 0; rest &= rest - 1) {
      const auto& [u, v] = g.ends[static_cast<std::size_t>(std::countr_zero(rest))];
      std::size_t ru = find(u);
      std::size_t rv = find(v);
      if (ru == rv) continue;
      parent[ru] = rv;
      ++joined;
    }
    return joined;
  }

  std::size_t rank_impl(const LinearRep& l, Mask x) const {
    std::vector<std::vector<std::uint64_t>> vectors;
    for (Mask rest = x; rest != 0; rest &= rest - 1) {
      vectors.push_back(l.columns[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    return detail::rank_mod_p(std::move(vectors), l.prime);
  }

  std::size_t rank_impl(const BasesRep& b, Mask x) const {
    int best = 0;
    for (Mask base : b.bases) best = std::max(best, popcount(base & x));
    return static_cast<std::size_t>(best);
  }

  std::size_t rank_impl(const TruncationRep& t, Mask x) const {
    return std::min(t.k, t.inner->rank(x));
  }

  std::size_t rank_impl(const MinorRep& mr, Mask x) const {
    Mask lifted = mr.contracted;
    for (Mask rest = x; rest != 0; rest &= rest - 1) {
      lifted |= Mask{1} << mr.parent_position[static_cast<std::size_t>(
                    std::countr_zero(rest))];
    }
    return mr.parent->rank(lifted) - mr.contracted_rank;
  }

  std::vector<Element> ground_;
  Rep rep_;
};

/// True when both matroids have the same ground set and the same bases.
inline bool same_matroid(const FiniteMatroid& a, const FiniteMatroid& b) {
  if (a.ground() != b.ground()) return false;
  if (a.rank() != b.rank()) return false;
  return a.bases() == b.bases();
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_FINITE_MATROID_HPP_
