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

#ifndef MATROID_FORGE_SELFTEST_HPP_
#define MATROID_FORGE_SELFTEST_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matroid_forge/equivalence.hpp"
#include "matroid_forge/finitary_matroid.hpp"
#include "matroid_forge/finite_matroid.hpp"
#include "matroid_forge/gen_trunc.hpp"
#include "matroid_forge/lemma8.hpp"
#include "matroid_forge/template_set.hpp"
#include "matroid_forge/truncation.hpp"

namespace matroid_forge {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct SelftestReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition && failures.size() < 20) failures.push_back(what);
  }
};

/// A small fixed corpus for the command-line self tests.
inline std::vector<FiniteMatroid> selftest_corpus() {
  std::vector<FiniteMatroid> out;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t k = 0; k <= n; ++k) out.push_back(FiniteMatroid::uniform(k, n));
  }
  out.push_back(FiniteMatroid::graphic({{1, 2}, {2, 3}, {1, 3}}));
  out.push_back(FiniteMatroid::graphic({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}}));
  out.push_back(FiniteMatroid::linear(2, {{1, 0, 1, 1}, {0, 1, 1, 0}}));
  out.push_back(FiniteMatroid::explicit_bases({1, 2, 3}, {{1, 2}, {2, 3}}));
  return out;
}

/// Rank laws, strong-equivalence laws and the family/definition bridge
/// on the self-test corpus.
inline SelftestReport run_lemma_suite(std::uint64_t seed = kDefaultSeed) {
  SelftestReport rep{"lemmas", seed, 0, {}};
  std::mt19937_64 rng(seed);
  for (const auto& m : selftest_corpus()) {
    const Mask full = m.full_mask();
    // (R3) on all chains C ⊆ B ⊆ A.
    for (Mask a = 0;; ++a) {
      for_each_submask(a, [&](Mask b) {
        for_each_submask(b, [&](Mask c) {
          rep.expect(m.relative_rank(a, c) ==
                         m.relative_rank(b, c) + m.relative_rank(a, b),
                     "R3");
        });
      });
      if (a == full) break;
    }
    // Strong equivalence against the rank definition.
    const auto indep = m.independent_sets();
    for (Mask i : indep) {
      for (Mask j : indep) {
        const bool by_rank = m.relative_rank(i, j) == m.relative_rank(j, i);
        rep.expect(strongly_equivalent(m, m.set_of(i), m.set_of(j)) == by_rank,
                   "strong equivalence vs rank definition");
      }
    }
    // Bridge on level families and random subfamilies.
    std::vector<SetFamily> families = enumerate_gen_truncations(m);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < 50; ++t) {
      SetFamily f;
      for (Mask x : indep) {
        if (coin(rng) != 0) f.push_back(m.set_of(x));
      }
      families.push_back(f);
    }
    for (const auto& f : families) {
      const bool left = verify_family(m, f).is_ok();
      bool right = check_base_axioms(m.ground_set(), f).is_ok();
      if (right) {
        std::vector<Mask> masks;
        for (const auto& b : f) masks.push_back(m.mask_of(b));
        const FiniteMatroid n = FiniteMatroid::trusted_bases(m.ground(), masks);
        right = verify_is_gen_truncation(m, n).is_ok();
      }
      rep.expect(left == right, "family bridge");
    }
  }
  return rep;
}

/// Enumeration against brute force, template ranks against finite prefix
/// restrictions, and witness validity on random instances.
inline SelftestReport run_oracle_suite(std::uint64_t seed = kDefaultSeed) {
  SelftestReport rep{"oracle", seed, 0, {}};
  std::mt19937_64 rng(seed);
  for (const auto& m : selftest_corpus()) {
    if (m.independent_sets().size() > kRawEnumerationBound) continue;
    rep.expect(enumerate_gen_truncations(m) == enumerate_raw(m),
               "level enumeration vs brute force");
  }
  const std::vector<FinitaryMatroid> schemas{
      FinitaryMatroid::free(),
      FinitaryMatroid::periodic_direct_sum(FiniteMatroid::uniform(1, 2)),
      FinitaryMatroid::periodic_direct_sum(
          FiniteMatroid::graphic({{1, 2}, {2, 3}, {1, 3}}))};
  std::uniform_int_distribution<std::uint64_t> small(1, 6);
  auto random_template = [&]() {
    const std::uint64_t d = small(rng);
    std::vector<std::uint64_t> res;
    for (std::uint64_t r = 0; r < d; ++r) {
      if (rng() % 2 == 0) res.push_back(r);
    }
    return TemplateSet(d, res, rng() % 8, {});
  };
  for (const auto& mf : schemas) {
    const FiniteMatroid prefix = mf.prefix_restriction(24);
    for (int t = 0; t < 200; ++t) {
      const TemplateSet x = random_template().intersect(TemplateSet::finite(
          TemplateSet::all().elements_below(24)));
      const TemplateSet y = random_template().intersect(TemplateSet::finite(
          TemplateSet::all().elements_below(24)));
      rep.expect(mf.relative_rank(x, y) ==
                     ExtendedNat(prefix.relative_rank(*x.as_finite(),
                                                      *y.as_finite())),
                 "template rank vs prefix restriction");
    }
    const TemplateSet base = mf.canonical_base();
    for (int t = 0; t < 100; ++t) {
      const TemplateSet i = base.intersect(random_template());
      const TemplateSet j = base.intersect(random_template());
      if (!i.is_infinite() || !j.is_infinite()) continue;
      const std::size_t n = rng() % 6;
      const ElementSet jp(j.first_elements(rng() % 3));
      const ElementSet w = lemma8_witness(mf, i, j, jp, n);
      const TemplateSet rest = j.minus(TemplateSet::finite(w));
      rep.expect(TemplateSet::finite(w).is_subset_of(j) &&
                     TemplateSet::finite(w).is_disjoint_from(TemplateSet::finite(jp)) &&
                     mf.relative_rank(i, rest) >= ExtendedNat(n),
                 "witness validity");
    }
  }
  return rep;
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_SELFTEST_HPP_
