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

#include "tablesetter/codec.hpp"

#include <algorithm>

#include "tablesetter/error.hpp"

namespace tablesetter {

using nlohmann::json;

namespace {

[[noreturn]] void corrupt(const std::string& what) {
  throw Error(ErrorCode::CorruptState, "state file: " + what);
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) corrupt(std::string("missing field '") + key + "'");
  return obj.at(key);
}

template <typename T>
T get(const json& obj, const char* key) {
  try {
    return field(obj, key).get<T>();
  } catch (const json::exception&) {
    corrupt(std::string("field '") + key + "' has the wrong type");
  }
}

json names_json(const ObjectLV& lv, const Catalog& catalog) { return decode(lv, catalog); }

ObjectLV lv_from_names(const json& names, const Catalog& catalog) {
  if (!names.is_array()) corrupt("object list is not an array");
  ObjectLV lv(catalog.size());
  for (const auto& n : names) {
    if (!n.is_string()) corrupt("object name is not a string");
    auto id = catalog.find(n.get<std::string>());
    if (!id) corrupt("unknown object '" + n.get<std::string>() + "'");
    lv.set(*id);
  }
  return lv;
}

json combos_json(const RequiredCombos& req, const Catalog& catalog) {
  json combos = json::array();
  for (const auto& combo : req.combos) {
    json names = json::array();
    for (auto id : combo) names.push_back(catalog.at(id).name);
    combos.push_back({{"objects", names}, {"inferred", req.inferred.contains(combo)}});
  }
  return {{"none_ok", req.none_ok}, {"combos", combos}};
}

}  // namespace

json object_to_json(const ObjectSpec& spec) {
  return {{"id", spec.id},
          {"name", spec.name},
          {"class", std::string(to_string(spec.cls))},
          {"graspable", spec.graspable}};
}

json catalog_to_json(const Catalog& catalog) {
  json out = json::array();
  for (const auto& spec : catalog.objects()) out.push_back(object_to_json(spec));
  return out;
}

json entry_to_json(const EpisodicEntry& entry, const Catalog& catalog) {
  return {{"id", entry.id},
          {"name", entry.name},
          {"objects", names_json(entry.lv, catalog)},
          {"taught_on_day", entry.taught_on_day}};
}

json entries_to_json(const EpisodicMemory& memory, const Catalog& catalog) {
  json out = json::array();
  for (const auto& e : memory.entries()) out.push_back(entry_to_json(e, catalog));
  return out;
}

json household_to_json(const Household& household) {
  const auto& catalog = household.catalog();
  const auto& stm = household.stm();
  json records = json::array();
  for (const auto& r : stm.records()) {
    if (const auto* id = std::get_if<EntryId>(&r.served)) {
      records.push_back({{"day", r.day}, {"entry", *id}});
    } else {
      records.push_back(
          {{"day", r.day}, {"surprise", names_json(std::get<Surprise>(r.served).lv, catalog)}});
    }
  }
  return {{"schema_version", kSchemaVersion},
          {"catalog", catalog_to_json(catalog)},
          {"episodic", entries_to_json(household.episodic(), catalog)},
          {"stm",
           {{"capacity_days", stm.capacity_days()},
            {"current_day", stm.current_day()},
            {"records", records}}},
          {"rng",
           {{"algorithm", std::string(Rng::kAlgorithm)},
            {"seed", household.rng().seed()},
            {"draws", household.rng().draws()}}}};
}

namespace {

Household household_from_json_unchecked(const json& doc) {
  if (get<int>(doc, "schema_version") != kSchemaVersion) corrupt("unsupported schema_version");

  Catalog catalog;
  const auto& objects = field(doc, "catalog");
  if (!objects.is_array()) corrupt("catalog is not an array");
  for (const auto& o : objects) {
    auto cls = parse_object_class(get<std::string>(o, "class"));
    if (!cls) corrupt("bad object class");
    if (get<std::size_t>(o, "id") != catalog.size()) corrupt("catalog ids are not dense");
    catalog.add_object(get<std::string>(o, "name"), *cls, get<bool>(o, "graspable"));
  }

  EpisodicMemory episodic;
  const auto& entries = field(doc, "episodic");
  if (!entries.is_array()) corrupt("episodic is not an array");
  for (const auto& e : entries) {
    if (get<std::size_t>(e, "id") != episodic.size()) corrupt("episodic ids are not dense");
    episodic.teach(get<std::string>(e, "name"), lv_from_names(field(e, "objects"), catalog),
                   catalog, get<Day>(e, "taught_on_day"));
  }

  const auto& stm_doc = field(doc, "stm");
  std::vector<StmRecord> records;
  const auto& recs = field(stm_doc, "records");
  if (!recs.is_array()) corrupt("stm.records is not an array");
  for (const auto& r : recs) {
    StmRecord rec;
    rec.day = get<Day>(r, "day");
    if (r.contains("entry")) {
      rec.served = get<EntryId>(r, "entry");
    } else {
      rec.served = Surprise{lv_from_names(field(r, "surprise"), catalog)};
    }
    records.push_back(std::move(rec));
  }
  ShortTermMemory stm(get<int>(stm_doc, "capacity_days"), get<Day>(stm_doc, "current_day"),
                      std::move(records));

  const auto& rng_doc = field(doc, "rng");
  if (get<std::string>(rng_doc, "algorithm") != Rng::kAlgorithm) corrupt("unsupported rng");
  auto rng = Rng::at_position(get<std::uint64_t>(rng_doc, "seed"),
                              get<std::uint64_t>(rng_doc, "draws"));

  return Household(std::move(catalog), std::move(episodic), std::move(stm), rng);
}

}  // namespace

Household household_from_json(const json& doc) {
  try {
    return household_from_json_unchecked(doc);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CorruptState) throw;
    corrupt(e.what());
  }
}

json plan_to_json(const ServePlan& plan) {
  json objects = json::array();
  for (const auto& o : plan.objects) objects.push_back({{"name", o.name}, {"graspable", o.graspable}});
  json source = plan.source == PlanSource::Episodic
                    ? json{{"kind", "episodic"}, {"entry", *plan.entry}, {"name", plan.entry_name}}
                    : json{{"kind", "created"}};
  return {{"source", source},
          {"objects", objects},
          {"robot_fetches", plan.robot_fetches},
          {"user_fetches", plan.user_fetches},
          {"day", plan.day}};
}

json history_to_json(const std::vector<HistoryRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = {{"day", row.day}, {"served", row.served}, {"objects", row.objects}};
    r["entry"] = row.entry ? json(*row.entry) : json(nullptr);
    out.push_back(std::move(r));
  }
  return out;
}

json graph_to_json(const KnowledgeGraph& graph, const Catalog& catalog) {
  json rules = json::array();
  for (const auto& [food, rule] : graph.rules) {
    rules.push_back({{"food", catalog.at(food).name},
                     {"id", food},
                     {"utensils", combos_json(rule.utensils, catalog)},
                     {"foods", combos_json(rule.foods, catalog)}});
  }
  return {{"built_from", graph.built_from}, {"rules", rules}};
}

std::vector<std::vector<std::string>> sorted_outputs(const BatchStats& stats,
                                                     const Catalog& catalog) {
  std::vector<std::vector<std::string>> out;
  for (const auto& lv : stats.outputs) out.push_back(decode(lv, catalog));
  std::sort(out.begin(), out.end());
  return out;
}

json batch_to_json(const BatchStats& stats, const Catalog& catalog) {
  return {{"requested", stats.requested},
          {"same_as_memory", stats.same_as_memory},
          {"invalid_before_fix", stats.invalid_before_fix},
          {"duplicate_new", stats.duplicate_new},
          {"distinct_new", stats.distinct_new},
          {"outputs", sorted_outputs(stats, catalog)}};
}

}  // namespace tablesetter
