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
// Line-oriented plain-text renderings used by the CLI. All listings are in
// ascending object-id order so output is byte-stable.

#include <string>
#include <vector>

#include "tablesetter/creativity.hpp"
#include "tablesetter/kitchen.hpp"
#include "tablesetter/rules.hpp"

namespace tablesetter {

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ");

std::string render_catalog(const Catalog& catalog);
std::string render_entries(const EpisodicMemory& memory, const Catalog& catalog);
std::string render_plan(const ServePlan& plan);
std::string render_history(const std::vector<HistoryRow>& rows);
std::string render_rules(const KnowledgeGraph& graph, const Catalog& catalog);
std::string render_batch(const BatchStats& stats, const Catalog& catalog);
std::string render_validation(const ValidationReport& report, const Catalog& catalog);

}  // namespace tablesetter
