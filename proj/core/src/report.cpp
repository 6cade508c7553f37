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

#include "tablesetter/report.hpp"

#include <sstream>

#include "tablesetter/codec.hpp"

namespace tablesetter {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

namespace {

std::string combo_names(const Combo& combo, const Catalog& catalog) {
  std::vector<std::string> names;
  for (auto id : combo) names.push_back(catalog.at(id).name);
  return join(names);
}

void render_combos(std::ostream& os, const char* label, const RequiredCombos& req,
                   const Catalog& catalog) {
  os << "  " << label << ": none_ok=" << (req.none_ok ? "true" : "false") << "\n";
  for (const auto& combo : req.combos) {
    os << "    - " << combo_names(combo, catalog);
    if (req.inferred.contains(combo)) os << " (inferred)";
    os << "\n";
  }
}

}  // namespace

std::string render_catalog(const Catalog& catalog) {
  std::ostringstream os;
  for (const auto& spec : catalog.objects()) {
    os << spec.id << " " << spec.name << " " << to_string(spec.cls)
       << (spec.graspable ? " graspable" : " not-graspable") << "\n";
  }
  return os.str();
}

std::string render_entries(const EpisodicMemory& memory, const Catalog& catalog) {
  std::ostringstream os;
  for (const auto& e : memory.entries()) {
    os << e.id << " " << e.name << ": " << join(decode(e.lv, catalog)) << "\n";
  }
  return os.str();
}

std::string render_plan(const ServePlan& plan) {
  std::ostringstream os;
  if (plan.source == PlanSource::Episodic) {
    os << "source: episodic " << *plan.entry << " (" << plan.entry_name << ")\n";
  } else {
    os << "source: created\n";
  }
  os << "day: " << plan.day << "\n";
  std::vector<std::string> names;
  for (const auto& o : plan.objects) names.push_back(o.name);
  os << "objects: " << join(names) << "\n";
  os << "robot_fetches: " << join(plan.robot_fetches) << "\n";
  os << "user_fetches: " << join(plan.user_fetches) << "\n";
  return os.str();
}

std::string render_history(const std::vector<HistoryRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << "day " << row.day << " " << row.served << ": " << join(row.objects) << "\n";
  }
  return os.str();
}

std::string render_rules(const KnowledgeGraph& graph, const Catalog& catalog) {
  std::ostringstream os;
  os << "built_from: " << graph.built_from << "\n";
  for (const auto& [food, rule] : graph.rules) {
    os << "food " << catalog.at(food).name << "\n";
    render_combos(os, "utensils", rule.utensils, catalog);
    render_combos(os, "foods", rule.foods, catalog);
  }
  return os.str();
}

std::string render_batch(const BatchStats& stats, const Catalog& catalog) {
  std::ostringstream os;
  os << "requested: " << stats.requested << "\n"
     << "same_as_memory: " << stats.same_as_memory << "\n"
     << "invalid_before_fix: " << stats.invalid_before_fix << "\n"
     << "duplicate_new: " << stats.duplicate_new << "\n"
     << "distinct_new: " << stats.distinct_new << "\n";
  for (const auto& names : sorted_outputs(stats, catalog)) os << "output: " << join(names) << "\n";
  return os.str();
}

std::string render_validation(const ValidationReport& report, const Catalog& catalog) {
  std::ostringstream os;
  os << "valid: " << (report.valid ? "true" : "false") << "\n";
  if (report.no_food) os << "problem: no food item\n";
  for (const auto& v : report.violations) {
    std::vector<std::string> alts;
    for (const auto& c : v.candidates) alts.push_back("{" + combo_names(c, catalog) + "}");
    os << "violation: " << catalog.at(v.food).name << " needs "
       << (v.missing_class == ObjectClass::Utensil ? "utensils" : "foods") << " one of "
       << join(alts, " ") << "\n";
  }
  for (auto id : report.unruled_foods) {
    os << "warning: no rule for " << catalog.at(id).name << "\n";
  }
  return os.str();
}

}  // namespace tablesetter
