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

#include "tablesetter/household.hpp"

#include "tablesetter/error.hpp"

namespace tablesetter {

Household::Household(int stm_days, std::uint64_t seed) : stm_(stm_days), rng_(seed) {}

Household::Household(Catalog catalog, EpisodicMemory episodic, ShortTermMemory stm, Rng rng)
    : catalog_(std::move(catalog)),
      episodic_(std::move(episodic)),
      stm_(std::move(stm)),
      rng_(rng) {
  for (const auto& e : episodic_.entries()) {
    if (e.lv.size() != catalog_.size()) {
      throw Error(ErrorCode::CorruptState, "episodic entry '" + e.name + "' has wrong dimensions");
    }
  }
  for (const auto& r : stm_.records()) {
    if (const auto* s = std::get_if<Surprise>(&r.served); s && s->lv.size() != catalog_.size()) {
      throw Error(ErrorCode::CorruptState, "STM surprise has wrong dimensions");
    }
    if (const auto* id = std::get_if<EntryId>(&r.served); id && *id >= episodic_.size()) {
      throw Error(ErrorCode::CorruptState, "STM refers to an unknown entry");
    }
  }
  graph_ = infer_rules(episodic_, catalog_);
}

ObjectId Household::add_object(std::string_view name, ObjectClass cls, bool graspable) {
  const auto id = catalog_.add_object(name, cls, graspable);
  episodic_.extend_dims(catalog_.size());
  stm_.extend_dims(catalog_.size());
  graph_ = infer_rules(episodic_, catalog_);
  return id;
}

const EpisodicEntry& Household::teach(std::string_view name,
                                      std::span<const std::string> object_names) {
  return teach(name, encode(object_names, catalog_));
}

const EpisodicEntry& Household::teach(std::string_view name, const ObjectLV& lv) {
  const auto& entry = episodic_.teach(name, lv, catalog_, stm_.current_day());
  graph_ = infer_rules(episodic_, catalog_);
  return entry;
}

void Household::record_served(Served served) {
  if (const auto* s = std::get_if<Surprise>(&served); s && s->lv.size() != catalog_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "surprise LV does not match catalog dimensions");
  }
  tablesetter::record_served(stm_, episodic_, std::move(served));
}

Day Household::advance_day() { return stm_.advance_day(); }

}  // namespace tablesetter
