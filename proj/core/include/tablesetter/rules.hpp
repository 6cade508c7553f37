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
// is_required knowledge graph inferred from taught setups.
//
// For every food seen in episodic memory, and separately for each companion
// class (utensils, other foods), the graph lists alternative combinations of
// companions; any one of them satisfies the food. Combinations come from two
// sources:
//   * inferred: companions that never co-occur with any other companion
//     (singletons) and maximal groups that always co-occur (identical
//     support), read off the m x m conditional-probability matrix;
//   * witnesses: the exact companion set of each training setup.
// none_ok is set when the food was taught at least once without any
// companion of that class.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "tablesetter/conceptspace.hpp"
#include "tablesetter/memory.hpp"

namespace tablesetter {

/// Object ids in ascending order.
using Combo = std::vector<ObjectId>;

struct RequiredCombos {
  std::set<Combo> combos;    // every alternative, inferred or witnessed
  std::set<Combo> inferred;  // subset of combos read off the dependency matrix
  bool none_ok = false;

  friend bool operator==(const RequiredCombos&, const RequiredCombos&) = default;
};

struct DependencyRule {
  ObjectId food = 0;
  RequiredCombos utensils;
  RequiredCombos foods;

  const RequiredCombos& companions(ObjectClass cls) const {
    return cls == ObjectClass::Utensil ? utensils : foods;
  }
  friend bool operator==(const DependencyRule&, const DependencyRule&) = default;
};

struct KnowledgeGraph {
  std::map<ObjectId, DependencyRule> rules;
  std::size_t built_from = 0;

  const DependencyRule* find(ObjectId food) const {
    auto it = rules.find(food);
    return it == rules.end() ? nullptr : &it->second;
  }
  friend bool operator==(const KnowledgeGraph&, const KnowledgeGraph&) = default;
};

/// P(j | l): among the LVs containing l, the fraction that also contain j.
/// nullopt when no LV contains l. Throws SameItem when j == l and
/// InvalidArgument when j and l belong to different classes.
std::optional<double> conditional_prob(ObjectId j, ObjectId l, std::span<const FoodContextLV> lvs,
                                       const Catalog& catalog);

/// Fraction of the LVs containing `food` that hold no object of
/// `companion_class` (the food itself is not its own companion).
/// Throws FoodUnseen when no LV contains the food.
double no_companion_prob(ObjectId food, ObjectClass companion_class,
                         std::span<const FoodContextLV> lvs, const Catalog& catalog);

/// Conditional probabilities among the companions of one food.
struct DependencyMatrix {
  std::vector<ObjectId> companions;                  // ascending ids
  std::vector<std::vector<std::optional<double>>> p;  // p[a][b] = P(companions[a] | companions[b])
};

/// `lvs` must already be restricted to the setups that contain `food`.
DependencyMatrix dependency_matrix(ObjectId food, ObjectClass companion_class,
                                   std::span<const FoodContextLV> lvs, const Catalog& catalog);

RequiredCombos infer_companions(ObjectId food, ObjectClass companion_class,
                                std::span<const FoodContextLV> lvs, const Catalog& catalog);

KnowledgeGraph infer_rules(std::span<const ObjectLV> lvs, const Catalog& catalog);
KnowledgeGraph infer_rules(const EpisodicMemory& memory, const Catalog& catalog);

struct Violation {
  ObjectId food = 0;
  ObjectClass missing_class = ObjectClass::Utensil;
  std::vector<Combo> candidates;
};

struct ValidationReport {
  bool valid = false;
  bool no_food = false;
  std::vector<Violation> violations;
  /// Present foods the graph has no rule for; they pass unchecked.
  std::vector<ObjectId> unruled_foods;
};

/// A present food is satisfied for utensils when none_ok holds or one of its
/// utensil combos is fully present. For other foods it is satisfied when
/// none_ok holds or any other food is present; the food combos then only
/// steer what fix() adds to a food served on its own.
ValidationReport validate(const ObjectLV& lv, const KnowledgeGraph& graph, const Catalog& catalog);

/// Adds missing companions until every present food is satisfied. Each round
/// picks, over all open violations, the candidate combo with the fewest
/// missing objects, then the one closing the most violations, then the
/// lexicographically smallest missing id list. Bits are only ever added.
/// Throws NoFoodItem and Unsatisfiable.
ObjectLV fix(const ObjectLV& lv, const KnowledgeGraph& graph, const Catalog& catalog);

}  // namespace tablesetter
