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

#include "support/fixtures.hpp"

#include <algorithm>

namespace tablesetter::testing {

Catalog table_one_catalog() {
  Catalog c;
  c.add_object("milk", ObjectClass::Food, true);
  c.add_object("cup", ObjectClass::Utensil, true);
  c.add_object("cereal", ObjectClass::Food, true);
  c.add_object("apple", ObjectClass::Food, true);
  c.add_object("orange", ObjectClass::Food, true);
  c.add_object("honey", ObjectClass::Food, true);
  c.add_object("banana", ObjectClass::Food, false);
  c.add_object("bowl", ObjectClass::Utensil, false);
  c.add_object("spoon", ObjectClass::Utensil, false);
  return c;
}

std::vector<Setup> table_one_setups() {
  return {
      {"milk", "cup"},
      {"milk", "cup", "banana"},
      {"milk", "cereal", "spoon", "bowl"},
      {"banana", "milk", "cereal", "spoon", "bowl"},
      {"honey", "milk", "cereal", "spoon", "bowl"},
      {"honey", "milk", "cup"},
      {"apple", "orange", "banana"},
  };
}

std::vector<Setup> table_three_setups() {
  return {
      {"milk", "banana", "honey", "cup"},
      {"apple", "milk", "cereal", "spoon", "bowl"},
      {"apple", "honey", "milk", "cereal", "spoon", "bowl"},
      {"milk", "cereal", "bowl", "cup", "spoon"},
      {"apple", "milk", "banana", "orange", "cup"},
  };
}

namespace {

Household from_catalog(const Catalog& catalog, std::uint64_t seed, int stm_days) {
  Household h(stm_days, seed);
  for (const auto& o : catalog.objects()) h.add_object(o.name, o.cls, o.graspable);
  return h;
}

void teach_all(Household& h, const std::vector<Setup>& setups) {
  for (std::size_t i = 0; i < setups.size(); ++i) {
    std::string name;
    for (const auto& o : setups[i]) name += (name.empty() ? "" : " ") + o;
    h.teach(name, setups[i]);
  }
}

Household twenty_five_objects(std::uint64_t seed) {
  Household h(kDefaultStmDays, seed);
  const std::vector<std::pair<const char*, bool>> foods = {
      {"milk", true},   {"cereal", true},  {"banana", false},       {"apple", true},
      {"orange", true}, {"honey", true},   {"bread", true},         {"butter", true},
      {"jam", true},    {"eggs", false},   {"yogurt", true},        {"granola", true},
      {"coffee", true}, {"juice", true},   {"peanut_butter", true}, {"tea", true},
  };
  const std::vector<std::pair<const char*, bool>> utensils = {
      {"cup", true},   {"bowl", false}, {"spoon", false}, {"plate", true}, {"knife", false},
      {"fork", false}, {"mug", true},   {"glass", true},  {"saucer", true},
  };
  for (auto [name, g] : foods) h.add_object(name, ObjectClass::Food, g);
  for (auto [name, g] : utensils) h.add_object(name, ObjectClass::Utensil, g);
  return h;
}

}  // namespace

Household table_one_household(std::uint64_t seed, int stm_days) {
  auto h = from_catalog(table_one_catalog(), seed, stm_days);
  teach_all(h, table_one_setups());
  return h;
}

Household large_household(std::uint64_t seed) {
  auto h = twenty_five_objects(seed);
  teach_all(h, {
                   {"milk", "cup"},
                   {"milk", "cereal", "bowl", "spoon"},
                   {"banana", "milk", "cereal", "bowl", "spoon"},
                   {"honey", "milk", "cup"},
                   {"apple", "orange", "banana"},
                   {"bread", "butter", "plate", "knife"},
                   {"bread", "jam", "plate", "knife"},
                   {"bread", "butter", "jam", "plate", "knife", "coffee", "mug"},
                   {"eggs", "bread", "plate", "fork"},
                   {"eggs", "plate", "fork", "juice", "glass"},
                   {"yogurt", "granola", "bowl", "spoon"},
                   {"yogurt", "honey", "bowl", "spoon"},
                   {"peanut_butter", "bread", "plate", "knife"},
                   {"coffee", "mug"},
                   {"tea", "cup", "saucer"},
                   {"juice", "glass", "apple"},
                   {"granola", "milk", "bowl", "spoon"},
                   {"bread", "peanut_butter", "banana", "plate", "knife"},
                   {"tea", "honey", "cup", "saucer"},
                   {"coffee", "milk", "mug", "eggs", "plate", "fork"},
               });
  return h;
}

Household unconventional_household(std::uint64_t seed) {
  auto h = twenty_five_objects(seed);
  teach_all(h, {
                   {"milk", "cup"},
                   {"milk", "cereal", "bowl", "spoon"},
                   {"apple", "orange", "banana"},
                   {"bread", "butter", "plate", "knife"},
                   {"eggs", "plate", "fork"},
                   {"coffee", "mug"},
                   {"cereal", "bowl"},
                   {"peanut_butter", "bowl", "spoon"},
                   {"yogurt", "spoon"},
                   {"apple", "yogurt", "peanut_butter"},
                   {"granola", "yogurt", "bowl"},
                   {"banana", "peanut_butter"},
               });
  return h;
}

Household random_household(std::mt19937_64& gen, std::size_t max_objects,
                           std::size_t max_setups) {
  std::uniform_int_distribution<std::size_t> n_objects(2, max_objects);
  std::bernoulli_distribution coin(0.5);
  Household h(kDefaultStmDays, gen());
  const auto count = n_objects(gen);
  for (std::size_t i = 0; i < count; ++i) {
    const bool food = i == 0 || coin(gen);
    h.add_object("o" + std::to_string(i), food ? ObjectClass::Food : ObjectClass::Utensil,
                 coin(gen));
  }
  const auto& catalog = h.catalog();
  const auto& foods = catalog.ids_of(ObjectClass::Food);
  std::uniform_int_distribution<std::size_t> n_setups(1, max_setups);
  std::uniform_int_distribution<std::size_t> pick_food(0, foods.size() - 1);
  std::bernoulli_distribution include(0.35);
  const auto wanted = n_setups(gen);
  for (std::size_t tries = 0; h.episodic().size() < wanted && tries < 20 * wanted; ++tries) {
    ObjectLV lv(catalog.size());
    lv.set(foods[pick_food(gen)]);
    for (ObjectId id = 0; id < catalog.size(); ++id) {
      if (include(gen)) lv.set(id);
    }
    if (h.episodic().find_setup(lv)) continue;
    h.teach("s" + std::to_string(h.episodic().size()), lv);
  }
  return h;
}

std::vector<std::size_t> recount(const std::vector<std::pair<Day, EntryId>>& log, Day current,
                                 int k, std::size_t entries) {
  std::vector<std::size_t> m(entries, 0);
  for (const auto& [day, id] : log) {
    if (day > current - k && day <= current) ++m[id];
  }
  return m;
}

std::set<EntryId> argmin_set(const std::vector<std::size_t>& counts) {
  std::set<EntryId> out;
  if (counts.empty()) return out;
  const auto lowest = *std::min_element(counts.begin(), counts.end());
  for (EntryId i = 0; i < counts.size(); ++i) {
    if (counts[i] == lowest) out.insert(i);
  }
  return out;
}

std::optional<ObjectLV> brute_force_repair(const ObjectLV& lv, const KnowledgeGraph& graph,
                                           const Catalog& catalog) {
  std::vector<ObjectId> absent;
  for (ObjectId id = 0; id < catalog.size(); ++id) {
    if (!lv.test(id)) absent.push_back(id);
  }
  for (std::size_t size = 0; size <= absent.size(); ++size) {
    std::vector<bool> mask(absent.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
    // prev_permutation on a descending mask walks subsets in ascending
    // lexicographic order of their id lists.
    do {
      ObjectLV trial = lv;
      for (std::size_t i = 0; i < absent.size(); ++i) {
        if (mask[i]) trial.set(absent[i]);
      }
      if (validate(trial, graph, catalog).valid) return trial;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return std::nullopt;
}

std::map<std::string, Combo> support_classes(ObjectId food, ObjectClass cls,
                                             const std::vector<ObjectLV>& lvs,
                                             const Catalog& catalog) {
  std::vector<const ObjectLV*> with_food;
  for (const auto& lv : lvs) {
    if (lv.test(food)) with_food.push_back(&lv);
  }
  std::map<std::string, Combo> classes;
  for (auto id : catalog.ids_of(cls)) {
    if (id == food) continue;
    std::string support;
    for (const auto* lv : with_food) support += lv->test(id) ? '1' : '0';
    if (support.find('1') == std::string::npos) continue;
    classes[support].push_back(id);
  }
  return classes;
}

}  // namespace tablesetter::testing
