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

#ifndef MATROID_FORGE_FORCING_HPP_
#define MATROID_FORGE_FORCING_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matroid_forge/class_search.hpp"
#include "matroid_forge/equivalence.hpp"
#include "matroid_forge/finitary_matroid.hpp"
#include "matroid_forge/gen_trunc.hpp"
#include "matroid_forge/lemma8.hpp"
#include "matroid_forge/sets.hpp"
#include "matroid_forge/task.hpp"
#include "matroid_forge/template_set.hpp"

namespace matroid_forge {

/// A finite partial function from J \ I to {0, 1}. q extends p (q ≤ p in
/// the forcing order) when q ⊇ p.
using Condition = std::map<Element, bool>;

inline ElementSet condition_domain(const Condition& p) {
  std::vector<Element> out;
  for (const auto& [e, v] : p) out.push_back(e);
  return ElementSet(std::move(out));
}

inline ElementSet condition_preimage(const Condition& p, bool value) {
  std::vector<Element> out;
  for (const auto& [e, v] : p) {
    if (v == value) out.push_back(e);
  }
  return ElementSet(std::move(out));
}

inline bool extends(const Condition& q, const Condition& p) {
  return std::all_of(p.begin(), p.end(), [&](const auto& kv) {
    auto it = q.find(kv.first);
    return it != q.end() && it->second == kv.second;
  });
}

inline std::string to_string(const Condition& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [e, v] : p) {
    if (!first) out += ", ";
    out += std::to_string(e) + "->" + (v ? "1" : "0");
    first = false;
  }
  return out + "}";
}

/// Raised when a step cannot run because the family fails a claim
/// precondition; carries the outcome text.
class ClaimFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a class search runs out of fuel.
class FuelExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClaimOutcome {
  enum class Kind {
    kOk,
    kClaim1Violated,
    kClaim2Violated,
    kTaskSatisfiableDirectly
  };

  Kind kind = Kind::kOk;
  std::optional<TemplateSet> violating;  // the representative B
  std::optional<TemplateSet> member;     // a member B' meeting the task

  bool is_ok() const { return kind == Kind::kOk; }

  std::string to_string() const {
    std::string out;
    switch (kind) {
      case Kind::kOk:
        return "ok";
      case Kind::kClaim1Violated:
        out = "claim1-violated(" + violating->to_string() + ")";
        break;
      case Kind::kClaim2Violated:
        out = "claim2-violated(" + violating->to_string() + ")";
        break;
      case Kind::kTaskSatisfiableDirectly:
        return "task-satisfiable-directly(" + member->to_string() + ")";
    }
    if (member) out += " satisfied-by(" + member->to_string() + ")";
    return out;
  }
};

namespace detail {

inline void require_incomparable(const FinitaryMatroid& mf,
                                 const std::vector<IndepSet>& reps) {
  if (!comparable_pairs(mf, reps).empty()) {
    throw std::invalid_argument(
        "family representatives are not pairwise incomparable");
  }
}

inline std::optional<TemplateSet> meeting_member(const FinitaryMatroid& mf,
                                                 const IndepSet& rep,
                                                 const Task& task,
                                                 std::size_t fuel) {
  using S = ClassSearchResult::Status;
  for (const auto& [lower, upper] :
       {std::pair<TemplateSet, std::optional<TemplateSet>>{task.i.set(),
                                                           task.j.set()},
        std::pair<TemplateSet, std::optional<TemplateSet>>{task.j.set(),
                                                           std::nullopt}}) {
    const auto r = find_class_member(mf, rep, lower, upper, fuel);
    if (r.found()) return r.member;
    if (r.status == S::kUnknown) throw FuelExhausted("class search ran out of fuel");
  }
  return std::nullopt;
}

inline void require_condition(const Condition& p, const Task& task) {
  const TemplateSet gap = task.j.set().minus(task.i.set());
  for (const auto& [e, v] : p) {
    if (!gap.contains(e)) {
      throw std::invalid_argument("condition assigns " + std::to_string(e) +
                                  ", which is not in J \\ I");
    }
  }
}

}  // namespace detail

/// Checks that no representative B has B ⊴ I (first claim), then that
/// none has J ⊴ B (second claim). A failing claim reports B together with
/// a class member meeting the task when one exists. When both claims hold
/// but the family already meets the task, that member is reported instead.
inline ClaimOutcome check_claim_preconditions(const FinitaryMatroid& mf,
                                              const TruncationFamily& f,
                                              const Task& task,
                                              std::size_t fuel = kDefaultFuel) {
  detail::require_incomparable(mf, f.representatives);
  using K = ClaimOutcome::Kind;
  for (const auto& b : f.representatives) {
    if (almost_spans(mf, b, task.i)) {
      return {K::kClaim1Violated, b.set(), detail::meeting_member(mf, b, task, fuel)};
    }
  }
  for (const auto& b : f.representatives) {
    if (almost_spans(mf, task.j, b)) {
      return {K::kClaim2Violated, b.set(), detail::meeting_member(mf, b, task, fuel)};
    }
  }
  const TaskOutcome t = evaluate_task(mf, f.representatives, task, fuel);
  if (t.status == TaskOutcome::Status::kUnknown) {
    throw FuelExhausted("class search ran out of fuel");
  }
  if (t.status == TaskOutcome::Status::kMet) {
    return {K::kTaskSatisfiableDirectly, std::nullopt, t.witness};
  }
  return {};
}

/// Extends p into C_{B,n} = { q : r(q^-1(1) | B) >= n }. Requires I ⊴ B.
/// Draws from a greedy M/B-independent part of (J \ I) \ B, which must be
/// infinite, and maps its n least elements outside dom(p) to 1.
inline Condition dense_extend_C(const FinitaryMatroid& mf, const Condition& p,
                                const IndepSet& b, std::size_t n,
                                const Task& task) {
  detail::require_condition(p, task);
  if (!almost_spans(mf, task.i, b)) {
    throw std::invalid_argument("dense_extend_C: I does not almost span into B");
  }
  auto measure = [&](const Condition& q) {
    return mf.relative_rank(TemplateSet::finite(condition_preimage(q, true)),
                            b.set());
  };
  if (n == 0 || measure(p) >= ExtendedNat(n)) return p;

  const TemplateSet gap = task.j.set().minus(task.i.set());
  const TemplateSet pool = mf.greedy_independent_subset(gap.minus(b.set()), b.set());
  if (!pool.is_infinite()) {
    throw std::invalid_argument(
        "dense_extend_C: J \\ I has no infinite part independent over B");
  }
  Condition q = p;
  const TemplateSet fresh = pool.minus(TemplateSet::finite(condition_domain(p)));
  for (Element e : fresh.first_elements(n)) q.emplace(e, true);
  if (!extends(q, p) || measure(q) < ExtendedNat(n)) {
    throw std::logic_error("dense_extend_C: extension failed to verify");
  }
  return q;
}

/// Extends p into D_{B,n} = { q : r(B | J \ q^-1(0)) >= n }. Requires
/// B ⊴ J. Applies the finite witness procedure in M/I to a greedy
/// M/I-independent part of B (which must be infinite) and maps the
/// resulting elements to 0.
inline Condition dense_extend_D(const FinitaryMatroid& mf, const Condition& p,
                                const IndepSet& b, std::size_t n,
                                const Task& task) {
  detail::require_condition(p, task);
  if (!almost_spans(mf, b, task.j)) {
    throw std::invalid_argument("dense_extend_D: B does not almost span into J");
  }
  auto measure = [&](const Condition& q) {
    return mf.relative_rank(
        b.set(),
        task.j.set().minus(TemplateSet::finite(condition_preimage(q, false))));
  };
  if (n == 0 || measure(p) >= ExtendedNat(n)) return p;

  const TemplateSet reduced =
      mf.greedy_independent_subset(b.set(), task.i.set());
  if (!reduced.is_infinite()) {
    throw std::invalid_argument(
        "dense_extend_D: B has no infinite part independent over I");
  }
  const ElementSet removed =
      lemma8_witness_over(mf, task.i.set(), reduced,
                          task.j.set().minus(task.i.set()),
                          condition_domain(p), n);
  Condition q = p;
  for (Element e : removed) {
    if (!q.emplace(e, false).second) {
      throw std::logic_error("dense_extend_D: witness touches dom(p)");
    }
  }
  if (!extends(q, p) || measure(q) < ExtendedNat(n)) {
    throw std::logic_error("dense_extend_D: extension failed to verify");
  }
  return q;
}

/// One verified inequality of a step certificate.
struct RankEvidence {
  char dense_set;            // 'C' or 'D'
  std::size_t representative;
  std::size_t n;
  ExtendedNat measured;      // left-hand side, recomputed on the final condition

  bool holds() const { return measured >= ExtendedNat(n); }
  std::string to_string() const {
    std::string lhs = dense_set == 'C' ? "r(q1 | B" : "r(B";
    lhs += std::to_string(representative);
    lhs += dense_set == 'C' ? ")" : " | J \\ q0)";
    return lhs + " = " + measured.to_string() + " >= " + std::to_string(n);
  }
};

struct StepCertificate {
  std::size_t depth = 0;
  Condition condition;
  std::vector<std::size_t> lower_side;  // indices of reps B with I ⊴ B
  std::vector<std::size_t> upper_side;  // indices of reps B with B ⊴ J
  std::vector<RankEvidence> evidence;   // one per (dense set, B, 1 <= n <= depth)
  TemplateSet b_low;                    // I ∪ q^-1(1)
  ElementSet b_excluded;                // q^-1(0)
  std::vector<RankEvidence> final_checks;
};

/// Meets every C_{B,n} (B ∈ 𝓡_I) and D_{B,n} (B ∈ 𝓡^J) with n <= depth by
/// a single condition, folding n = 1..depth in the outer loop and, for each
/// n, the C-sets then the D-sets in representative order. Every recorded
/// inequality is recomputed before the certificate is returned.
inline StepCertificate forcing_step(const FinitaryMatroid& mf,
                                    const TruncationFamily& f,
                                    const Task& task, std::size_t depth,
                                    std::size_t fuel = kDefaultFuel) {
  const ClaimOutcome claims = check_claim_preconditions(mf, f, task, fuel);
  if (!claims.is_ok()) throw ClaimFailure(claims.to_string());

  StepCertificate cert;
  cert.depth = depth;
  const auto& reps = f.representatives;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    if (almost_spans(mf, task.i, reps[k])) cert.lower_side.push_back(k);
    if (almost_spans(mf, reps[k], task.j)) cert.upper_side.push_back(k);
  }
  Condition q;
  for (std::size_t n = 1; n <= depth; ++n) {
    for (std::size_t k : cert.lower_side) q = dense_extend_C(mf, q, reps[k], n, task);
    for (std::size_t k : cert.upper_side) q = dense_extend_D(mf, q, reps[k], n, task);
  }
  cert.condition = q;
  cert.b_low = task.i.set().unite(TemplateSet::finite(condition_preimage(q, true)));
  cert.b_excluded = condition_preimage(q, false);

  const TemplateSet ones = TemplateSet::finite(condition_preimage(q, true));
  const TemplateSet kept = task.j.set().minus(TemplateSet::finite(cert.b_excluded));
  for (std::size_t n = 1; n <= depth; ++n) {
    for (std::size_t k : cert.lower_side) {
      cert.evidence.push_back({'C', k, n, mf.relative_rank(ones, reps[k].set())});
    }
    for (std::size_t k : cert.upper_side) {
      cert.evidence.push_back({'D', k, n, mf.relative_rank(reps[k].set(), kept)});
    }
  }
  for (std::size_t k : cert.lower_side) {
    cert.final_checks.push_back(
        {'C', k, depth, mf.relative_rank(cert.b_low, reps[k].set())});
  }
  for (std::size_t k : cert.upper_side) {
    cert.final_checks.push_back(
        {'D', k, depth, mf.relative_rank(reps[k].set(), kept)});
  }
  for (const auto& ev : cert.evidence) {
    if (!ev.holds()) throw std::logic_error("forcing_step: " + ev.to_string());
  }
  for (const auto& ev : cert.final_checks) {
    if (!ev.holds()) throw std::logic_error("forcing_step: " + ev.to_string());
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Seed families.

inline constexpr std::size_t kSeedPrefixBound = 16;

/// The image of an index set T under x -> (x-th smallest element of base).
/// `base` must be infinite.
inline TemplateSet index_through(const TemplateSet& base, const TemplateSet& t) {
  if (!base.is_infinite()) throw std::invalid_argument("base must be infinite");
  const std::uint64_t per_period = base.residues().size();
  const std::uint64_t index_period = std::lcm(t.period(), per_period);
  const std::uint64_t period = index_period / per_period * base.period();
  if (period > kTemplateLimit) throw std::out_of_range("seed period too large");
  const std::uint64_t low_count = base.low().size();
  const std::uint64_t start_index = std::max(t.threshold(), low_count);
  // Walk the base up to one full period past the start index.
  std::vector<Element> low;
  std::vector<std::uint64_t> residues;
  std::uint64_t index = 0;
  std::optional<Element> start;
  for (Element e = 0;; ++e) {
    if (!base.contains(e)) continue;
    if (index == start_index) start = e;
    if (start && e >= *start + period) break;
    if (t.contains(index)) {
      if (start) {
        residues.push_back(e % period);
      } else {
        low.push_back(e);
      }
    }
    ++index;
  }
  return TemplateSet(period, residues, *start, ElementSet(std::move(low)));
}

/// B_{n,1} = odd multiples of 2^n and B_{n,0} = { x ≡ 2^n (mod 2^(n+2)) },
/// as index sets into the canonical base.
inline TemplateSet seed_index_set(std::size_t n, bool bit) {
  const std::uint64_t unit = std::uint64_t{1} << n;
  return TemplateSet(bit ? 2 * unit : 4 * unit, {unit}, 0, {});
}

/// 𝓕_s: one representative B_{n, s(n)} per position of the prefix, mapped
/// into the canonical base of the schema.
inline TruncationFamily seed_family(const FinitaryMatroid& mf,
                                    const std::string& prefix) {
  if (prefix.empty()) throw std::invalid_argument("seed prefix is empty");
  if (prefix.size() > kSeedPrefixBound) {
    throw std::invalid_argument("seed prefix longer than " +
                                std::to_string(kSeedPrefixBound));
  }
  const TemplateSet base = mf.canonical_base();
  TruncationFamily f;
  f.name = "seed-" + prefix;
  for (std::size_t n = 0; n < prefix.size(); ++n) {
    if (prefix[n] != '0' && prefix[n] != '1') {
      throw std::invalid_argument("seed prefix must consist of 0 and 1");
    }
    const TemplateSet index = seed_index_set(n, prefix[n] == '1');
    f.representatives.push_back(
        IndepSet::certify(mf, mf.is_free() ? index : index_through(base, index)));
  }
  if (!comparable_pairs(mf, f.representatives).empty()) {
    throw std::logic_error("seed family has comparable representatives");
  }
  return f;
}

/// Union of two families, dropping repeated representatives.
inline TruncationFamily merge_families(const TruncationFamily& a,
                                       const TruncationFamily& b) {
  TruncationFamily out{a.name + "+" + b.name, a.representatives};
  for (const auto& rep : b.representatives) {
    if (std::find(out.representatives.begin(), out.representatives.end(), rep) ==
        out.representatives.end()) {
      out.representatives.push_back(rep);
    }
  }
  return out;
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_FORCING_HPP_
