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

#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"

namespace mf = matroid_forge;
using namespace mf_test;
using mf::FinitaryMatroid;
using mf::IndepSet;
using mf::TemplateSet;

namespace {

SetFamily level(const FiniteMatroid& m, std::size_t k) {
  SetFamily out;
  for (Mask x : m.independent_sets()) {
    if (static_cast<std::size_t>(std::popcount(x)) == k) out.push_back(m.set_of(x));
  }
  return out;
}

std::vector<Mask> masks(const FiniteMatroid& m, const SetFamily& f) {
  std::vector<Mask> out;
  for (const auto& s : f) out.push_back(m.mask_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(VerifyFamily, LevelsPass) {
  const FiniteMatroid u = FiniteMatroid::uniform(2, 3);
  for (std::size_t k = 0; k <= 2; ++k) {
    EXPECT_TRUE(mf::verify_family(u, level(u, k)).is_ok()) << k;
  }
}

TEST(VerifyFamily, MixedLevelsFailCondition3) {
  const FiniteMatroid u = FiniteMatroid::uniform(2, 3);
  const SetFamily f{ElementSet(), ElementSet({1})};
  const mf::Verdict v = mf::verify_family(u, f);
  ASSERT_FALSE(v.is_ok());
  EXPECT_EQ(v.violation().rule, "3");
  EXPECT_EQ(v.violation().sets,
            (std::vector<ElementSet>{ElementSet({1}), ElementSet(), ElementSet()}));
  EXPECT_TRUE(mf::replay(u, f, v.violation()));
}

TEST(VerifyFamily, OtherConditions) {
  const FiniteMatroid u = FiniteMatroid::uniform(2, 3);
  const auto v1 = mf::verify_family(u, {ElementSet({1, 2, 3})});
  ASSERT_FALSE(v1.is_ok());
  EXPECT_EQ(v1.violation().rule, "1");
  EXPECT_EQ(mf::verify_family(u, {}).violation().rule, "1");
  const SetFamily partial{ElementSet({1})};
  const auto v2 = mf::verify_family(u, partial);
  ASSERT_FALSE(v2.is_ok());
  EXPECT_EQ(v2.violation().rule, "2");
  EXPECT_TRUE(mf::replay(u, partial, v2.violation()));
}

TEST(VerifyIsGenTruncation, Examples) {
  const FiniteMatroid u = FiniteMatroid::uniform(2, 3);
  const FiniteMatroid n = FiniteMatroid::explicit_bases(ElementSet({1, 2, 3}), {ElementSet({1})});
  const mf::Verdict v = mf::verify_is_gen_truncation(u, n);
  ASSERT_FALSE(v.is_ok());
  EXPECT_EQ(v.violation().rule, "III");
  EXPECT_EQ(v.violation().sets, std::vector<ElementSet>{ElementSet()});
  EXPECT_EQ(v.violation().element, Element{2});
  EXPECT_TRUE(mf::replay_gen_truncation(u, n, v.violation()));

  EXPECT_TRUE(mf::verify_is_gen_truncation(u, FiniteMatroid::uniform(1, 3)).is_ok());
  EXPECT_EQ(mf::verify_is_gen_truncation(u, FiniteMatroid::uniform(1, 4)).violation().rule, "I");
  const FiniteMatroid two_base = FiniteMatroid::explicit_bases(
      ElementSet({1, 2, 3}), {ElementSet({1, 2}), ElementSet({2, 3})});
  const auto v2 = mf::verify_is_gen_truncation(two_base, u);
  ASSERT_FALSE(v2.is_ok());
  EXPECT_EQ(v2.violation().rule, "II");
  EXPECT_TRUE(mf::replay_gen_truncation(two_base, u, v2.violation()));
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(mf::enumerate_gen_truncations(FiniteMatroid::uniform(2, 3)).size(), 3U);
  EXPECT_EQ(mf::enumerate_gen_truncations(FiniteMatroid::uniform(0, 3)).size(), 1U);
  EXPECT_EQ(mf::enumerate_gen_truncations(FiniteMatroid::uniform(4, 4)).size(), 5U);
  EXPECT_EQ(mf::enumerate_gen_truncations(FiniteMatroid::uniform(1, 2)).size(), 2U);
  EXPECT_EQ(mf::enumerate_gen_truncations(
                FiniteMatroid::explicit_bases(ElementSet({1}), {ElementSet({1})}))
                .size(),
            2U);
}

TEST(Enumerate, RawAgreesWithLevels) {
  for (const auto& e : explicit_corpus()) {
    const FiniteMatroid m = FiniteMatroid::construct(e.description);
    if (m.independent_sets().size() > mf::kRawEnumerationBound) continue;
    EXPECT_EQ(mf::enumerate_raw(m), mf::enumerate_gen_truncations(m)) << e.name;
  }
  EXPECT_THROW(mf::enumerate_raw(FiniteMatroid::uniform(3, 5)), std::out_of_range);
}

// Every subset of 𝓘(M) decided by the literal definition, against
// verify_family and the enumerator.
TEST(Properties, FamiliesAgreeWithDefinition) {
  for (const auto& e : finite_corpus()) {
    const FiniteMatroid m = FiniteMatroid::construct(e.description);
    const Oracle o = oracle_of(e.description);
    const auto indep = o.independent_sets();
    if (indep.size() > 11) continue;
    std::set<std::vector<Mask>> expected;
    for (std::uint64_t choice = 1; choice < (std::uint64_t{1} << indep.size()); ++choice) {
      std::vector<Mask> f;
      for (std::size_t i = 0; i < indep.size(); ++i) {
        if ((choice >> i) & 1U) f.push_back(indep[i]);
      }
      const bool truth = oracle_is_base_family(o.size(), f) && oracle_is_gen_truncation(o, f);
      SetFamily sets;
      for (Mask x : f) sets.push_back(o.set_of(x));
      const mf::Verdict v = mf::verify_family(m, sets);
      ASSERT_EQ(v.is_ok(), truth) << e.name;
      if (!v.is_ok()) EXPECT_TRUE(mf::replay(m, sets, v.violation())) << e.name;
      if (truth) expected.insert(f);
    }
    std::set<std::vector<Mask>> got;
    for (const auto& f : mf::enumerate_gen_truncations(m)) got.insert(masks(m, f));
    EXPECT_EQ(got, expected) << e.name;
  }
}

TEST(Properties, EnumeratedFamiliesAreGenTruncations) {
  for (const auto& e : finite_corpus()) {
    const FiniteMatroid m = FiniteMatroid::construct(e.description);
    const Oracle o = oracle_of(e.description);
    for (const auto& f : mf::enumerate_gen_truncations(m)) {
      const FiniteMatroid n = FiniteMatroid::explicit_bases(m.ground_set(), f);
      EXPECT_TRUE(mf::verify_is_gen_truncation(m, n).is_ok()) << e.name;
      EXPECT_TRUE(oracle_is_gen_truncation(o, masks(m, f))) << e.name;
    }
  }
}

// ---------------------------------------------------------------------------
// Finitary families.

mf::TruncationFamily family(const FinitaryMatroid& mf, std::vector<TemplateSet> reps) {
  mf::TruncationFamily f;
  for (const auto& t : reps) f.representatives.push_back(IndepSet::certify(mf, t));
  return f;
}

TEST(VerifyFamilyFinitary, Examples) {
  const FinitaryMatroid f = FinitaryMatroid::free();
  const auto evens = family(f, {TemplateSet::evens()});
  const auto met = mf::verify_family_finitary(
      f, evens, {mf::make_task(f, TemplateSet::empty(), TemplateSet::evens())});
  EXPECT_EQ(met.to_string(), "ok");
  ASSERT_EQ(met.tasks.size(), 1U);
  EXPECT_EQ(met.tasks[0].status, mf::TaskOutcome::Status::kMet);

  const auto unmet = mf::verify_family_finitary(
      f, evens, {mf::make_task(f, TemplateSet::empty(), TemplateSet::odds())});
  EXPECT_EQ(unmet.status, mf::FinitaryVerdict::Status::kViolation);
  EXPECT_EQ(unmet.rule, "4");
  EXPECT_EQ(unmet.task_index, std::optional<std::size_t>(0));

  const auto comparable =
      mf::verify_family_finitary(f, family(f, {TemplateSet::multiples(4), TemplateSet::evens()}), {});
  EXPECT_EQ(comparable.rule, "3");
  EXPECT_EQ(comparable.witness.size(), 2U);

  EXPECT_EQ(mf::verify_family_finitary(f, mf::TruncationFamily{}, {}).rule, "1");
}

TEST(VerifyFamilyFinitary, FuelBoundsTheClassSearch) {
  const FinitaryMatroid f = FinitaryMatroid::free();
  const auto mult4 = family(f, {TemplateSet::multiples(4)});
  const std::vector<mf::Task> tasks{
      mf::make_task(f, TemplateSet::finite(ElementSet({1, 3, 5, 7})), TemplateSet::all())};
  EXPECT_EQ(mf::verify_family_finitary(f, mult4, tasks).status, mf::FinitaryVerdict::Status::kOk);
  EXPECT_EQ(mf::verify_family_finitary(f, mult4, tasks, 0).status,
            mf::FinitaryVerdict::Status::kUnknown);
}

TEST(VerifyFamilyFinitary, DirectSumExample) {
  const FinitaryMatroid s = FinitaryMatroid::periodic_direct_sum(FiniteMatroid::uniform(1, 2));
  const auto fam = family(s, {TemplateSet(8, {0, 2, 6}, 0, {}), TemplateSet(8, {4}, 0, {})});
  const auto v = mf::verify_family_finitary(s, fam, {});
  EXPECT_EQ(v.status, mf::FinitaryVerdict::Status::kOk);
  // evens and odds are strongly equivalent there, so listing both is no
  // comparability.
  const auto same = family(s, {TemplateSet::evens(), TemplateSet::odds()});
  EXPECT_TRUE(mf::comparable_pairs(s, same.representatives).empty());
  EXPECT_EQ(mf::subset_pairs(same.representatives).size(), 0U);
}

}  // namespace
