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

#include "tablesetter/rules.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "tablesetter/error.hpp"

namespace tablesetter {

std::optional<double> conditional_prob(ObjectId j, ObjectId l, std::span<const FoodContextLV> lvs,
                                       const Catalog& catalog) {
  if (j == l) throw Error(ErrorCode::SameItem, "conditional_prob needs two distinct objects");
  if (catalog.at(j).cls != catalog.at(l).cls) {
    throw Error(ErrorCode::InvalidArgument, "conditional_prob compares objects of one class");
  }
  std::size_t with_l = 0;
  std::size_t with_both = 0;
  for (const auto& lv : lvs) {
    if (!contains(lv, l, catalog)) continue;
    ++with_l;
    if (contains(lv, j, catalog)) ++with_both;
  }
  if (with_l == 0) return std::nullopt;
  return static_cast<double>(with_both) / static_cast<double>(with_l);
}

namespace {

// Companion ids of `cls` present in one LV, excluding `food`.
Combo companions_in(const FoodContextLV& lv, ObjectId food, ObjectClass cls,
                    const Catalog& catalog) {
  Combo out;
  for (auto id : catalog.ids_of(cls)) {
    if (id != food && contains(lv, id, catalog)) out.push_back(id);
  }
  return out;
}

}  // namespace

double no_companion_prob(ObjectId food, ObjectClass companion_class,
                         std::span<const FoodContextLV> lvs, const Catalog& catalog) {
  std::size_t with_food = 0;
  std::size_t alone = 0;
  for (const auto& lv : lvs) {
    if (!contains(lv, food, catalog)) continue;
    ++with_food;
    if (companions_in(lv, food, companion_class, catalog).empty()) ++alone;
  }
  if (with_food == 0) {
    throw Error(ErrorCode::FoodUnseen, catalog.at(food).name + " appears in no taught setup");
  }
  return static_cast<double>(alone) / static_cast<double>(with_food);
}

DependencyMatrix dependency_matrix(ObjectId food, ObjectClass companion_class,
                                   std::span<const FoodContextLV> lvs, const Catalog& catalog) {
  DependencyMatrix dm;
  for (auto id : catalog.ids_of(companion_class)) {
    if (id == food) continue;
    if (std::any_of(lvs.begin(), lvs.end(),
                    [&](const FoodContextLV& lv) { return contains(lv, id, catalog); })) {
      dm.companions.push_back(id);
    }
  }
  const auto m = dm.companions.size();
  dm.p.assign(m, std::vector<std::optional<double>>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b) dm.p[a][b] = conditional_prob(dm.companions[a], dm.companions[b], lvs, catalog);
    }
  }
  return dm;
}

RequiredCombos infer_companions(ObjectId food, ObjectClass companion_class,
                                std::span<const FoodContextLV> lvs, const Catalog& catalog) {
  RequiredCombos out;
  out.none_ok = no_companion_prob(food, companion_class, lvs, catalog) > 0.0;

  const auto dm = dependency_matrix(food, companion_class, lvs, catalog);
  const auto m = dm.companions.size();

  // Independent companions: P(j|l) = 0 against every other companion.
  for (std::size_t a = 0; a < m; ++a) {
    bool independent = true;
    for (std::size_t b = 0; b < m && independent; ++b) {
      if (a != b && dm.p[a][b].value_or(0.0) != 0.0) independent = false;
    }
    if (independent) out.inferred.insert(Combo{dm.companions[a]});
  }

  // Interdependent groups: connected components of P(j|l) = P(l|j) = 1.
  // Exact co-occurrence is transitive, so components are cliques.
  std::vector<std::size_t> group(m);
  std::iota(group.begin(), group.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (group[x] != x) x = group[x] = group[group[x]];
    return x;
  };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (dm.p[a][b] == 1.0 && dm.p[b][a] == 1.0) group[root(b)] = root(a);
    }
  }
  std::map<std::size_t, Combo> classes;
  for (std::size_t a = 0; a < m; ++a) classes[root(a)].push_back(dm.companions[a]);
  for (auto& [_, members] : classes) {
    if (members.size() >= 2) out.inferred.insert(members);
  }

  out.combos = out.inferred;
  for (const auto& lv : lvs) {
    if (!contains(lv, food, catalog)) continue;
    auto witness = companions_in(lv, food, companion_class, catalog);
    if (!witness.empty()) out.combos.insert(std::move(witness));
  }
  return out;
}

KnowledgeGraph infer_rules(std::span<const ObjectLV> lvs, const Catalog& catalog) {
  KnowledgeGraph graph;
  graph.built_from = lvs.size();
  std::vector<FoodContextLV> views;
  views.reserve(lvs.size());
  for (const auto& lv : lvs) views.push_back(food_context_view(lv, catalog));

  for (auto food : catalog.ids_of(ObjectClass::Food)) {
    std::vector<FoodContextLV> restricted;
    for (const auto& v : views) {
      if (contains(v, food, catalog)) restricted.push_back(v);
    }
    if (restricted.empty()) continue;
    DependencyRule rule;
    rule.food = food;
    rule.utensils = infer_companions(food, ObjectClass::Utensil, restricted, catalog);
    rule.foods = infer_companions(food, ObjectClass::Food, restricted, catalog);
    graph.rules.emplace(food, std::move(rule));
  }
  return graph;
}

KnowledgeGraph infer_rules(const EpisodicMemory& memory, const Catalog& catalog) {
  const auto lvs = memory.lvs();
  return infer_rules(std::span<const ObjectLV>(lvs), catalog);
}

namespace {

bool combo_present(const Combo& combo, const ObjectLV& lv) {
  return std::all_of(combo.begin(), combo.end(), [&](ObjectId id) { return lv.test(id); });
}

bool other_food_present(ObjectId food, const ObjectLV& lv, const Catalog& catalog) {
  for (auto id : catalog.ids_of(ObjectClass::Food)) {
    if (id != food && lv.test(id)) return true;
  }
  return false;
}

bool satisfied(const Violation& v, const RequiredCombos& req, const ObjectLV& lv,
               const Catalog& catalog) {
  if (req.none_ok) return true;
  if (v.missing_class == ObjectClass::Food) return other_food_present(v.food, lv, catalog);
  return std::any_of(req.combos.begin(), req.combos.end(),
                     [&](const Combo& c) { return combo_present(c, lv); });
}

}  // namespace

ValidationReport validate(const ObjectLV& lv, const KnowledgeGraph& graph, const Catalog& catalog) {
  if (lv.size() != catalog.size()) {
    throw Error(ErrorCode::DimensionMismatch, "LV does not match catalog dimensions");
  }
  ValidationReport report;
  bool any_food = false;
  for (auto food : catalog.ids_of(ObjectClass::Food)) {
    if (!lv.test(food)) continue;
    any_food = true;
    const auto* rule = graph.find(food);
    if (rule == nullptr) {
      report.unruled_foods.push_back(food);
      continue;
    }
    for (auto cls : {ObjectClass::Utensil, ObjectClass::Food}) {
      const auto& req = rule->companions(cls);
      Violation v{food, cls, {}};
      if (satisfied(v, req, lv, catalog)) continue;
      v.candidates.assign(req.combos.begin(), req.combos.end());
      report.violations.push_back(std::move(v));
    }
  }
  report.no_food = !any_food;
  report.valid = any_food && report.violations.empty();
  return report;
}

ObjectLV fix(const ObjectLV& lv, const KnowledgeGraph& graph, const Catalog& catalog) {
  if (lv.size() != catalog.size()) {
    throw Error(ErrorCode::DimensionMismatch, "LV does not match catalog dimensions");
  }
  if (!has_food(lv, catalog)) throw Error(ErrorCode::NoFoodItem, "cannot repair a setup without food");

  ObjectLV out = lv;
  for (std::size_t round = 0; round <= catalog.size(); ++round) {
    const auto report = validate(out, graph, catalog);
    if (report.valid) return out;

    struct Choice {
      Combo missing;
      std::size_t closes = 0;
    };
    std::optional<Choice> best;
    auto better = [](const Choice& a, const Choice& b) {
      return std::forward_as_tuple(a.missing.size(), b.closes, a.missing) <
             std::forward_as_tuple(b.missing.size(), a.closes, b.missing);
    };
    for (const auto& v : report.violations) {
      for (const auto& combo : v.candidates) {
        Choice c;
        for (auto id : combo) {
          if (id >= catalog.size()) {
            throw Error(ErrorCode::Unsatisfiable, "rule references an object outside the catalog");
          }
          if (!out.test(id)) c.missing.push_back(id);
        }
        if (c.missing.empty()) continue;
        ObjectLV trial = out;
        for (auto id : c.missing) trial.set(id);
        for (const auto& other : report.violations) {
          if (satisfied(other, graph.find(other.food)->companions(other.missing_class), trial,
                        catalog)) {
            ++c.closes;
          }
        }
        if (!best || better(c, *best)) best = std::move(c);
      }
    }
    if (!best) {
      throw Error(ErrorCode::Unsatisfiable,
                  "no candidate combination repairs " + catalog.at(report.violations.front().food).name);
    }
    for (auto id : best->missing) out.set(id);
  }
  throw Error(ErrorCode::Unsatisfiable, "repair did not reach a fixed point");
}

}  // namespace tablesetter
