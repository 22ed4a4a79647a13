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

#ifndef MATROID_FORGE_MATROID_FORGE_HPP_
#define MATROID_FORGE_MATROID_FORGE_HPP_

#include "matroid_forge/base_axioms.hpp"
#include "matroid_forge/class_search.hpp"
#include "matroid_forge/equivalence.hpp"
#include "matroid_forge/finitary_matroid.hpp"
#include "matroid_forge/finite_matroid.hpp"
#include "matroid_forge/forcing.hpp"
#include "matroid_forge/gen_trunc.hpp"
#include "matroid_forge/lemma8.hpp"
#include "matroid_forge/selftest.hpp"
#include "matroid_forge/sets.hpp"
#include "matroid_forge/task.hpp"
#include "matroid_forge/template_set.hpp"
#include "matroid_forge/text_format.hpp"
#include "matroid_forge/truncation.hpp"

#endif  // MATROID_FORGE_MATROID_FORGE_HPP_
