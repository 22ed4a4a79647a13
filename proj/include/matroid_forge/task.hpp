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

#ifndef MATROID_FORGE_TASK_HPP_
#define MATROID_FORGE_TASK_HPP_

#include <stdexcept>
#include <string>

#include "matroid_forge/equivalence.hpp"
#include "matroid_forge/finitary_matroid.hpp"
#include "matroid_forge/template_set.hpp"

namespace matroid_forge {

/// A pair I ⊆ J of independent sets with J \ I infinite.
struct Task {
  IndepSet i;
  IndepSet j;

  std::string to_string() const {
    return "(" + i.set().to_string() + ", " + j.set().to_string() + ")";
  }
};

inline Task make_task(const FinitaryMatroid& mf, const TemplateSet& i,
                      const TemplateSet& j) {
  if (!i.is_subset_of(j)) {
    throw std::invalid_argument("task: I is not a subset of J");
  }
  if (!mf.is_independent(j)) {
    throw std::invalid_argument("task: J is dependent");
  }
  if (!j.minus(i).is_infinite()) {
    throw std::invalid_argument("task: J \\ I is finite");
  }
  return Task{IndepSet::certify(mf, i), IndepSet::certify(mf, j)};
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_TASK_HPP_
