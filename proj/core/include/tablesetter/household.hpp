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
// The persisted aggregate: catalog, episodic memory, short-term memory and
// the household random stream. All mutation goes through this type so the
// knowledge graph and LV dimensions stay in step with the catalog.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "tablesetter/conceptspace.hpp"
#include "tablesetter/memory.hpp"
#include "tablesetter/rng.hpp"
#include "tablesetter/rules.hpp"

namespace tablesetter {

class Household {
 public:
  explicit Household(int stm_days = kDefaultStmDays, std::uint64_t seed = 0);
  /// Reassembles a saved household; checks that every LV matches the catalog.
  Household(Catalog catalog, EpisodicMemory episodic, ShortTermMemory stm, Rng rng);

  const Catalog& catalog() const noexcept { return catalog_; }
  const EpisodicMemory& episodic() const noexcept { return episodic_; }
  const ShortTermMemory& stm() const noexcept { return stm_; }
  const KnowledgeGraph& knowledge_graph() const noexcept { return graph_; }
  Rng& rng() noexcept { return rng_; }
  const Rng& rng() const noexcept { return rng_; }
  Day current_day() const noexcept { return stm_.current_day(); }

  ObjectId add_object(std::string_view name, ObjectClass cls, bool graspable);
  const EpisodicEntry& teach(std::string_view name, std::span<const std::string> object_names);
  const EpisodicEntry& teach(std::string_view name, const ObjectLV& lv);
  void record_served(Served served);
  Day advance_day();

 private:
  Catalog catalog_;
  EpisodicMemory episodic_;
  ShortTermMemory stm_;
  Rng rng_;
  KnowledgeGraph graph_;
};

}  // namespace tablesetter
