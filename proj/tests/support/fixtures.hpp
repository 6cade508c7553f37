// Copyright 2026 The tablesetter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once
// Household fixtures and brute-force oracles shared by the unit and
// acceptance suites. Oracles here never call into the code path they check.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tablesetter/household.hpp"
#include "tablesetter/rules.hpp"

namespace tablesetter::testing {

using Setup = std::vector<std::string>;

/// The nine objects of the robot kitchen, in registration order:
/// milk cup cereal apple orange honey (graspable), banana bowl spoon (not).
Catalog table_one_catalog();
/// The seven taught breakfasts.
std::vector<Setup> table_one_setups();
/// The five created breakfasts that were all judged valid.
std::vector<Setup> table_three_setups();

Household table_one_household(std::uint64_t seed = 0, int stm_days = kDefaultStmDays);

/// 25 objects (16 foods, 9 utensils) and 20 taught setups.
Household large_household(std::uint64_t seed = 0);
/// Same 25 objects, 12 setups of which 6 are unconventional.
Household unconventional_household(std::uint64_t seed = 0);

/// Random catalog (2..max_objects objects, >= 1 food) and up to max_setups
/// distinct setups, each with >= 1 food.
Household random_household(std::mt19937_64& gen, std::size_t max_objects = 20,
                           std::size_t max_setups = 15);

/// Replay oracle: counts of entry servings with day in (current - k, current].
std::vector<std::size_t> recount(const std::vector<std::pair<Day, EntryId>>& log, Day current,
                                 int k, std::size_t entries);
std::set<EntryId> argmin_set(const std::vector<std::size_t>& counts);

/// Smallest set of absent objects whose addition validates `lv`; ties by
/// ascending id list. Exhaustive, so only for small catalogs.
std::optional<ObjectLV> brute_force_repair(const ObjectLV& lv, const KnowledgeGraph& graph,
                                           const Catalog& catalog);

/// Companions of `cls` grouped by identical support over the setups holding
/// `food`. Keyed by support bitmask (as a string of 0/1 per setup).
std::map<std::string, Combo> support_classes(ObjectId food, ObjectClass cls,
                                             const std::vector<ObjectLV>& lvs,
                                             const Catalog& catalog);

}  // namespace tablesetter::testing
