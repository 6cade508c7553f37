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
// JSON forms shared by the state file, the HTTP service and `--json` output.
// LVs are always written as object-name arrays in ascending id order.

#include <nlohmann/json.hpp>

#include "tablesetter/creativity.hpp"
#include "tablesetter/household.hpp"
#include "tablesetter/kitchen.hpp"
#include "tablesetter/rules.hpp"

namespace tablesetter {

inline constexpr int kSchemaVersion = 1;

nlohmann::json household_to_json(const Household& household);
/// Throws CorruptState on schema violations.
Household household_from_json(const nlohmann::json& doc);

nlohmann::json object_to_json(const ObjectSpec& spec);
nlohmann::json catalog_to_json(const Catalog& catalog);
nlohmann::json entry_to_json(const EpisodicEntry& entry, const Catalog& catalog);
nlohmann::json entries_to_json(const EpisodicMemory& memory, const Catalog& catalog);
nlohmann::json plan_to_json(const ServePlan& plan);
nlohmann::json history_to_json(const std::vector<HistoryRow>& rows);
nlohmann::json graph_to_json(const KnowledgeGraph& graph, const Catalog& catalog);
nlohmann::json batch_to_json(const BatchStats& stats, const Catalog& catalog);

/// Decoded batch outputs sorted lexicographically.
std::vector<std::vector<std::string>> sorted_outputs(const BatchStats& stats,
                                                     const Catalog& catalog);

}  // namespace tablesetter
