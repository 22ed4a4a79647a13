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

#ifndef MATROID_FORGE_CLASS_SEARCH_HPP_
#define MATROID_FORGE_CLASS_SEARCH_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matroid_forge/equivalence.hpp"
#include "matroid_forge/finitary_matroid.hpp"
#include "matroid_forge/template_set.hpp"

namespace matroid_forge {

inline constexpr std::size_t kDefaultFuel = 1'000'000;

struct ClassSearchResult {
  enum class Status { kFound, kNone, kUnknown };

  Status status = Status::kNone;
  std::optional<TemplateSet> member;

  bool found() const { return status == Status::kFound; }
};

namespace detail {

struct LocalOption {
  Mask set;
  std::int64_t delta;  // r(S | R) - r(R | S) on one component
  bool neutral;        // both relative ranks vanish
};

// Independent S with lower ⊆ S ⊆ upper on one component, at most one per
// delta value (the least mask), neutral options first.
inline std::vector<LocalOption> local_options(const FiniteMatroid& m0,
                                              Mask rep, Mask lower,
                                              Mask upper) {
  std::vector<LocalOption> out;
  if (!is_submask(lower, upper)) return out;
  std::map<std::int64_t, Mask> by_delta;
  std::optional<Mask> neutral;
  const std::size_t rep_rank = m0.rank(rep);
  std::vector<Mask> candidates;
  for_each_submask(upper & ~lower,
                   [&](Mask extra) { candidates.push_back(lower | extra); });
  std::sort(candidates.begin(), candidates.end());
  for (Mask s : candidates) {
    if (!m0.is_independent(s)) continue;
    const std::size_t joint = m0.rank(s | rep);
    const auto a = static_cast<std::int64_t>(joint - rep_rank);
    const auto b = static_cast<std::int64_t>(joint - popcount(s));
    if (a == 0 && b == 0 && !neutral) neutral = s;
    by_delta.emplace(a - b, s);
  }
  if (neutral) out.push_back({*neutral, 0, true});
  for (const auto& [delta, s] : by_delta) {
    if (neutral && s == *neutral) continue;
    out.push_back({s, delta, false});
  }
  return out;
}

}  // namespace detail

/// Looks for B ~ rep with lower ⊆ B (⊆ upper when given), B independent.
///
/// Components are independent, so B ~ rep means: all but finitely many
/// components carry a neutral trace, and the per-component differences
/// r(B_c | R_c) - r(R_c | B_c) sum to zero. Regular component types (of
/// which there are infinitely many copies each) must admit a neutral trace
/// and may contribute any number of non-neutral ones; the remaining
/// components contribute exactly one trace each. Reachability of zero is
/// searched breadth-first over a window that provably contains a solution
/// path when one exists; `fuel` caps the number of explored states.
inline ClassSearchResult find_class_member(
    const FinitaryMatroid& mf, const IndepSet& rep, const TemplateSet& lower,
    const std::optional<TemplateSet>& upper,
    std::size_t fuel = kDefaultFuel) {
  rep.require_owner(mf);
  using Status = ClassSearchResult::Status;
  const TemplateSet& r = rep.set();
  if (upper && !lower.is_subset_of(*upper)) return {Status::kNone, {}};

  std::vector<const TemplateSet*> sets{&r, &lower};
  if (upper) sets.push_back(&*upper);
  const ComponentLayout l = mf.layout(sets);
  const FiniteMatroid& m0 = mf.component();
  const Mask full = low_bits(mf.component_size());
  auto options_at = [&](std::uint64_t c) {
    return detail::local_options(m0, mf.local_mask(r, c),
                                 mf.local_mask(lower, c),
                                 upper ? mf.local_mask(*upper, c) : full);
  };

  // Regular types: a neutral default plus the usable non-neutral steps.
  std::vector<Mask> defaults(l.types);
  struct Step {
    std::uint64_t type;
    Mask set;
    std::int64_t delta;
  };
  std::vector<Step> steps;
  std::int64_t widest = 0;
  for (std::uint64_t type = 0; type < l.types; ++type) {
    const auto opts = options_at(l.representative(type));
    if (opts.empty() || !opts.front().neutral) return {Status::kNone, {}};
    defaults[type] = opts.front().set;
    for (const auto& o : opts) {
      if (o.neutral || o.delta == 0) continue;
      if (std::none_of(steps.begin(), steps.end(),
                       [&](const Step& s) { return s.delta == o.delta; })) {
        steps.push_back({type, o.set, o.delta});
        widest = std::max(widest, o.delta < 0 ? -o.delta : o.delta);
      }
    }
  }

  // Irregular components: reachable sums with back-pointers.
  std::vector<std::map<std::int64_t, std::pair<std::int64_t, Mask>>> stages(1);
  stages[0][0] = {0, 0};
  for (std::uint64_t c = 0; c < l.first_regular; ++c) {
    const auto opts = options_at(c);
    if (opts.empty()) return {Status::kNone, {}};
    std::map<std::int64_t, std::pair<std::int64_t, Mask>> next;
    for (const auto& [sum, unused] : stages.back()) {
      for (const auto& o : opts) next.emplace(sum + o.delta, std::pair{sum, o.set});
    }
    stages.push_back(std::move(next));
  }

  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (const auto& [sum, unused] : stages.back()) {
    lo = std::min(lo, sum);
    hi = std::max(hi, sum);
  }
  lo -= widest;
  hi += widest;

  // Breadth-first search from every irregular sum to zero.
  struct Visit {
    bool start;
    std::int64_t prev;
    std::size_t step;
  };
  std::map<std::int64_t, Visit> seen;
  std::deque<std::int64_t> queue;
  for (const auto& [sum, unused] : stages.back()) {
    seen.emplace(sum, Visit{true, 0, 0});
    queue.push_back(sum);
  }
  std::size_t explored = 0;
  std::optional<std::int64_t> goal;
  while (!queue.empty()) {
    const std::int64_t v = queue.front();
    queue.pop_front();
    if (v == 0) {
      goal = v;
      break;
    }
    if (++explored > fuel) return {Status::kUnknown, {}};
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const std::int64_t w = v + steps[i].delta;
      if (w < lo || w > hi || seen.count(w) > 0) continue;
      seen.emplace(w, Visit{false, v, i});
      queue.push_back(w);
    }
  }
  if (!goal) return {Status::kNone, {}};

  std::vector<std::size_t> used;
  std::int64_t v = *goal;
  while (!seen.at(v).start) {
    used.push_back(seen.at(v).step);
    v = seen.at(v).prev;
  }
  std::map<std::uint64_t, Mask> chosen;
  for (std::size_t stage = stages.size() - 1; stage > 0; --stage) {
    const auto& [prev, set] = stages[stage].at(v);
    chosen[stage - 1] = set;
    v = prev;
  }
  std::map<std::uint64_t, std::uint64_t> next_free;
  std::uint64_t last = 0;
  for (std::size_t i : used) {
    const Step& s = steps[i];
    auto [it, fresh] = next_free.emplace(s.type, l.representative(s.type));
    chosen[it->second] = s.set;
    last = std::max(last, it->second + 1);
    it->second += l.types;
  }

  ComponentLayout out_layout = l;
  out_layout.first_regular = std::max(l.first_regular, last);
  const TemplateSet member =
      mf.build_template(out_layout, [&](std::uint64_t c) {
        auto it = chosen.find(c);
        if (it != chosen.end()) return it->second;
        return defaults[c % l.types];
      });

  const bool valid =
      mf.is_independent(member) && lower.is_subset_of(member) &&
      (!upper || member.is_subset_of(*upper)) &&
      strongly_equivalent(mf, IndepSet::certify(mf, member), rep);
  if (!valid) {
    throw std::logic_error("class search produced an invalid member");
  }
  return {Status::kFound, member};
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_CLASS_SEARCH_HPP_
