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

#ifndef MATROID_FORGE_GEN_TRUNC_HPP_
#define MATROID_FORGE_GEN_TRUNC_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matroid_forge/base_axioms.hpp"
#include "matroid_forge/class_search.hpp"
#include "matroid_forge/equivalence.hpp"
#include "matroid_forge/finitary_matroid.hpp"
#include "matroid_forge/finite_matroid.hpp"
#include "matroid_forge/sets.hpp"
#include "matroid_forge/task.hpp"
#include "matroid_forge/template_set.hpp"

namespace matroid_forge {

// Exhaustive bound for verify_family (condition (4) walks all independent
// pairs), for level enumeration, and for raw enumeration (|I(M)|).
inline constexpr std::size_t kVerifyFamilyBound = 12;
inline constexpr std::size_t kLevelEnumerationBound = 10;
inline constexpr std::size_t kRawEnumerationBound = 16;

namespace detail {

inline std::vector<Mask> family_masks(const FiniteMatroid& m,
                                      const SetFamily& f) {
  std::vector<Mask> out;
  for (const auto& s : f) out.push_back(m.mask_of(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline SetFamily family_sets(const FiniteMatroid& m,
                             const std::vector<Mask>& f) {
  SetFamily out;
  for (Mask b : f) out.push_back(m.set_of(b));
  std::sort(out.begin(), out.end());
  return out;
}

inline Verdict fail(std::string rule, std::vector<ElementSet> sets,
                    std::optional<Element> e = std::nullopt) {
  return Verdict::fail({std::move(rule), std::move(sets), e});
}

// Core of verify_family on masks. `independent` lists 𝓘(M) ascending.
inline Verdict verify_family_masks(const FiniteMatroid& m,
                                   const std::vector<Mask>& f,
                                   const std::vector<Mask>& independent) {
  auto set = [&](Mask x) { return m.set_of(x); };
  if (f.empty()) return fail("1", {});
  for (Mask b : f) {
    if (!m.is_independent(b)) return fail("1", {set(b)});
  }

  // (3) via closures of the maximal proper subsets B - x.
  for (Mask b : f) {
    for (Mask xs = b; xs != 0; xs &= xs - 1) {
      const Mask s = b & ~(xs & (~xs + 1));
      Mask closure = s;
      const std::size_t rank_s = m.rank(s);
      for (std::size_t i = 0; i < m.size(); ++i) {
        const Mask bit = Mask{1} << i;
        if ((closure & bit) == 0 && m.rank(s | bit) == rank_s) closure |= bit;
      }
      for (Mask other : f) {
        if (is_submask(other, closure)) {
          return fail("3", {set(b), set(other), set(s)});
        }
      }
    }
  }

  // (2): in a finite matroid the sets at finite, balanced distance from B
  // are the independent sets of the same size.
  for (Mask b : f) {
    for (Mask other : independent) {
      if (popcount(other) != popcount(b)) continue;
      if (!std::binary_search(f.begin(), f.end(), other)) {
        return fail("2", {set(b), set(other)});
      }
    }
  }

  // (4) over all independent pairs I ⊆ J.
  const std::size_t n = m.size();
  std::vector<bool> in_family(std::size_t{1} << n, false);
  std::vector<bool> below_family(std::size_t{1} << n, false);
  for (Mask b : f) {
    in_family[b] = true;
    for_each_submask(b, [&](Mask sub) { below_family[sub] = true; });
  }
  for (Mask j : independent) {
    for (Mask i = j;; i = (i - 1) & j) {
      if (below_family[i] && !below_family[j]) {
        bool between = false;
        for_each_submask(j & ~i, [&](Mask extra) {
          between = between || in_family[i | extra];
        });
        if (!between) return fail("4", {set(i), set(j)});
      }
      if (i == 0) break;
    }
  }
  return Verdict::ok();
}

}  // namespace detail

/// Checks conditions (1)-(4) characterising base families of generalised
/// truncations of M, all exhaustively. Checks run in the order 1, 3, 2, 4
/// and report the first failure found.
inline Verdict verify_family(const FiniteMatroid& m, const SetFamily& f) {
  const std::size_t bound = exhaustive_bound(kVerifyFamilyBound);
  if (m.size() > bound) {
    throw std::out_of_range("verify_family: |ground| = " +
                            std::to_string(m.size()) + " exceeds bound " +
                            std::to_string(bound));
  }
  const std::vector<Mask> masks = detail::family_masks(m, f);
  return detail::verify_family_masks(m, masks, m.independent_sets());
}

/// Checks the definition directly: (I) equal ground sets, (II) every
/// N-independent set is M-independent, (III) non-bases of N extend in N
/// by every element that extends them in M.
inline Verdict verify_is_gen_truncation(const FiniteMatroid& m,
                                        const FiniteMatroid& n) {
  if (m.ground() != n.ground()) {
    return detail::fail("I", {m.ground_set(), n.ground_set()});
  }
  const std::vector<Mask> indep_n = n.independent_sets();
  for (Mask x : indep_n) {
    if (!m.is_independent(x)) return detail::fail("II", {n.set_of(x)});
  }
  const std::size_t rank_n = n.rank();
  for (Mask x : indep_n) {
    if (static_cast<std::size_t>(popcount(x)) == rank_n) continue;  // a base
    for (std::size_t e = 0; e < n.size(); ++e) {
      const Mask bit = Mask{1} << e;
      if ((x & bit) != 0) continue;
      if (m.is_independent(x | bit) && !n.is_independent(x | bit)) {
        return detail::fail("III", {n.set_of(x)}, n.ground()[e]);
      }
    }
  }
  return Verdict::ok();
}

/// Re-checks a reported violation of verify_family; true when the witness
/// still demonstrates the failure.
inline bool replay(const FiniteMatroid& m, const SetFamily& f,
                   const Violation& v) {
  const std::vector<Mask> masks = detail::family_masks(m, f);
  auto in_f = [&](const ElementSet& s) {
    return std::binary_search(masks.begin(), masks.end(), m.mask_of(s));
  };
  const auto& s = v.sets;
  if (v.rule == "1") {
    if (s.empty()) return masks.empty();
    return in_f(s[0]) && !m.is_independent(s[0]);
  }
  if (v.rule == "2" && s.size() == 2) {
    return in_f(s[0]) && m.is_independent(s[1]) && !in_f(s[1]) &&
           s[0].minus(s[1]).size() == s[1].minus(s[0]).size();
  }
  if (v.rule == "3" && s.size() == 3) {
    return in_f(s[0]) && in_f(s[1]) && s[2].is_subset_of(s[0]) &&
           s[2] != s[0] && m.relative_rank(s[1], s[2]) == 0;
  }
  if (v.rule == "4" && s.size() == 2) {
    const ElementSet& i = s[0];
    const ElementSet& j = s[1];
    if (!i.is_subset_of(j) || !m.is_independent(j)) return false;
    bool premise = false;
    bool met = false;
    for (Mask b : masks) {
      const ElementSet bs = m.set_of(b);
      premise = premise || i.is_subset_of(bs);
      met = met || (i.is_subset_of(bs) && bs.is_subset_of(j)) ||
            j.is_subset_of(bs);
    }
    return premise && !met;
  }
  return false;
}

/// Re-checks a violation reported by verify_is_gen_truncation.
inline bool replay_gen_truncation(const FiniteMatroid& m,
                                  const FiniteMatroid& n, const Violation& v) {
  const auto& s = v.sets;
  if (v.rule == "I") return m.ground() != n.ground();
  if (v.rule == "II" && s.size() == 1) {
    return n.is_independent(s[0]) && !m.is_independent(s[0]);
  }
  if (v.rule == "III" && s.size() == 1 && v.element) {
    const ElementSet grown = s[0].with(*v.element);
    return n.is_independent(s[0]) && n.rank(s[0]) < n.rank() &&
           !s[0].contains(*v.element) && m.is_independent(grown) &&
           !n.is_independent(grown);
  }
  return false;
}

/// All families passing verify_family, found among unions of size levels
/// of 𝓘(M); each result is re-checked against the base axioms.
inline std::vector<SetFamily> enumerate_gen_truncations(const FiniteMatroid& m) {
  const std::size_t bound = exhaustive_bound(kLevelEnumerationBound);
  if (m.size() > bound) {
    throw std::out_of_range("enumerate_gen_truncations: |ground| = " +
                            std::to_string(m.size()) + " exceeds bound " +
                            std::to_string(bound));
  }
  const std::vector<Mask> independent = m.independent_sets();
  const std::size_t r = m.rank();
  std::vector<std::vector<Mask>> levels(r + 1);
  for (Mask x : independent) levels[popcount(x)].push_back(x);

  std::vector<SetFamily> out;
  for (std::uint64_t choice = 1; choice < (std::uint64_t{1} << (r + 1));
       ++choice) {
    std::vector<Mask> f;
    for (std::size_t k = 0; k <= r; ++k) {
      if ((choice >> k) & 1U) f.insert(f.end(), levels[k].begin(), levels[k].end());
    }
    std::sort(f.begin(), f.end());
    if (!detail::verify_family_masks(m, f, independent).is_ok()) continue;
    SetFamily sets = detail::family_sets(m, f);
    if (!check_base_axioms(m.ground_set(), sets).is_ok()) {
      throw std::logic_error("family passing conditions (1)-(4) is not a "
                             "matroid base family");
    }
    out.push_back(std::move(sets));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All subsets of 𝓘(M) passing verify_family, by brute force.
inline std::vector<SetFamily> enumerate_raw(const FiniteMatroid& m) {
  const std::vector<Mask> independent = m.independent_sets();
  if (independent.size() > kRawEnumerationBound) {
    throw std::out_of_range("enumerate_raw: |I(M)| = " +
                            std::to_string(independent.size()) +
                            " exceeds bound " +
                            std::to_string(kRawEnumerationBound));
  }
  std::vector<SetFamily> out;
  const std::uint64_t total = std::uint64_t{1} << independent.size();
  for (std::uint64_t choice = 0; choice < total; ++choice) {
    std::vector<Mask> f;
    for (std::size_t i = 0; i < independent.size(); ++i) {
      if ((choice >> i) & 1U) f.push_back(independent[i]);
    }
    if (detail::verify_family_masks(m, f, independent).is_ok()) {
      out.push_back(detail::family_sets(m, f));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Finitary families.

/// A union of strong-equivalence classes, one representative each.
struct TruncationFamily {
  std::string name;
  std::vector<IndepSet> representatives;
};

/// Pairs (a, b), a < b, of non-equivalent representatives where one almost
/// spans the other.
inline std::vector<std::pair<std::size_t, std::size_t>> comparable_pairs(
    const FinitaryMatroid& mf, const std::vector<IndepSet>& reps) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      if (strongly_equivalent(mf, reps[a], reps[b])) continue;
      if (almost_spans(mf, reps[a], reps[b]) ||
          almost_spans(mf, reps[b], reps[a])) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

/// Pairs (a, b) of distinct representatives with one a subset of the other.
inline std::vector<std::pair<std::size_t, std::size_t>> subset_pairs(
    const std::vector<IndepSet>& reps) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      const TemplateSet& x = reps[a].set();
      const TemplateSet& y = reps[b].set();
      if (x != y && (x.is_subset_of(y) || y.is_subset_of(x))) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

struct TaskOutcome {
  enum class Status { kMet, kVacuous, kUnmet, kUnknown };

  Status status = Status::kUnknown;
  std::optional<TemplateSet> witness;  // the member B' meeting the task

  std::string to_string() const {
    switch (status) {
      case Status::kMet:
        return "met by " + witness->to_string();
      case Status::kVacuous:
        return "vacuous";
      case Status::kUnmet:
        return "unmet";
      case Status::kUnknown:
        break;
    }
    return "unknown";
  }
};

/// How the family meets a task: some member B' with I ⊆ B' ⊆ J or
/// B' ⊇ J, if some member includes I at all.
inline TaskOutcome evaluate_task(const FinitaryMatroid& mf,
                                 const std::vector<IndepSet>& reps,
                                 const Task& task, std::size_t fuel) {
  using S = ClassSearchResult::Status;
  const TemplateSet& i = task.i.set();
  const TemplateSet& j = task.j.set();
  bool premise = false;
  bool premise_unknown = false;
  for (const auto& rep : reps) {
    const auto r = find_class_member(mf, rep, i, std::nullopt, fuel);
    premise = premise || r.found();
    premise_unknown = premise_unknown || r.status == S::kUnknown;
  }
  if (!premise) {
    return {premise_unknown ? TaskOutcome::Status::kUnknown
                            : TaskOutcome::Status::kVacuous,
            std::nullopt};
  }
  bool unknown = false;
  for (const auto& rep : reps) {
    for (const auto& [lower, upper] :
         {std::pair<TemplateSet, std::optional<TemplateSet>>{i, j},
          std::pair<TemplateSet, std::optional<TemplateSet>>{j, std::nullopt}}) {
      const auto r = find_class_member(mf, rep, lower, upper, fuel);
      if (r.found()) return {TaskOutcome::Status::kMet, r.member};
      unknown = unknown || r.status == S::kUnknown;
    }
  }
  return {unknown ? TaskOutcome::Status::kUnknown : TaskOutcome::Status::kUnmet,
          std::nullopt};
}

struct FinitaryVerdict {
  enum class Status { kOk, kViolation, kUnknown };

  Status status = Status::kOk;
  std::string rule;                      // set for violations
  std::vector<TemplateSet> witness;      // offending representatives
  std::optional<std::size_t> task_index; // for condition (4)
  std::vector<TaskOutcome> tasks;

  std::string to_string() const {
    if (status == Status::kOk) return "ok";
    if (status == Status::kUnknown) return "unknown";
    std::string out = "violation(" + rule;
    for (const auto& t : witness) out += ", " + t.to_string();
    if (task_index) out += ", task " + std::to_string(*task_index);
    return out + ")";
  }
};

/// Conditions (1)-(3) on the representatives, and condition (4) for the
/// given tasks only. (2) holds by construction, the family being a union
/// of whole classes; (3) is checked as pairwise ⊴-incomparability of
/// non-equivalent representatives.
inline FinitaryVerdict verify_family_finitary(const FinitaryMatroid& mf,
                                              const TruncationFamily& f,
                                              const std::vector<Task>& tasks,
                                              std::size_t fuel = kDefaultFuel) {
  FinitaryVerdict out;
  for (const auto& rep : f.representatives) rep.require_owner(mf);
  for (const auto& t : tasks) {
    t.i.require_owner(mf);
    t.j.require_owner(mf);
  }
  if (f.representatives.empty()) {
    out.status = FinitaryVerdict::Status::kViolation;
    out.rule = "1";
    return out;
  }
  const auto pairs = comparable_pairs(mf, f.representatives);
  if (!pairs.empty()) {
    out.status = FinitaryVerdict::Status::kViolation;
    out.rule = "3";
    out.witness = {f.representatives[pairs.front().first].set(),
                   f.representatives[pairs.front().second].set()};
    return out;
  }
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    out.tasks.push_back(evaluate_task(mf, f.representatives, tasks[k], fuel));
  }
  for (std::size_t k = 0; k < out.tasks.size(); ++k) {
    if (out.tasks[k].status == TaskOutcome::Status::kUnmet) {
      out.status = FinitaryVerdict::Status::kViolation;
      out.rule = "4";
      out.task_index = k;
      return out;
    }
  }
  for (const auto& t : out.tasks) {
    if (t.status == TaskOutcome::Status::kUnknown) {
      out.status = FinitaryVerdict::Status::kUnknown;
    }
  }
  return out;
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_GEN_TRUNC_HPP_
