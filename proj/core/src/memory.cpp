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

#include "tablesetter/memory.hpp"

#include <algorithm>

#include "tablesetter/error.hpp"

namespace tablesetter {

const EpisodicEntry& EpisodicMemory::teach(std::string_view name, const ObjectLV& lv,
                                           const Catalog& catalog, Day day) {
  auto stored = trim(name);
  if (stored.empty()) throw Error(ErrorCode::InvalidArgument, "breakfast name must not be empty");
  if (lv.size() != catalog.size()) {
    throw Error(ErrorCode::DimensionMismatch, "setup does not match catalog dimensions");
  }
  if (!has_food(lv, catalog)) {
    throw Error(ErrorCode::NoFoodItem, "a breakfast needs at least one food item");
  }
  if (find_by_name(stored)) throw Error(ErrorCode::DuplicateName, "breakfast already taught: " + stored);
  if (auto existing = find_setup(lv)) {
    throw Error(ErrorCode::DuplicateSetup,
                "same setup already taught as '" + entries_[*existing].name + "'");
  }
  entries_.push_back(EpisodicEntry{entries_.size(), std::move(stored), lv, day});
  return entries_.back();
}

const EpisodicEntry& EpisodicMemory::at(EntryId id) const {
  if (id >= entries_.size()) {
    throw Error(ErrorCode::UnknownEntry, "no breakfast entry with id " + std::to_string(id));
  }
  return entries_[id];
}

std::optional<EntryId> EpisodicMemory::find_by_name(std::string_view name) const {
  const auto key = name_key(name);
  for (const auto& e : entries_) {
    if (name_key(e.name) == key) return e.id;
  }
  return std::nullopt;
}

std::optional<EntryId> EpisodicMemory::find_setup(const ObjectLV& lv) const {
  for (const auto& e : entries_) {
    if (e.lv == lv) return e.id;
  }
  return std::nullopt;
}

std::vector<ObjectLV> EpisodicMemory::lvs() const {
  std::vector<ObjectLV> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.lv);
  return out;
}

void EpisodicMemory::extend_dims(std::size_t dims) {
  for (auto& e : entries_) e.lv = e.lv.zero_extended(dims);
}

const EpisodicEntry& teach(EpisodicMemory& memory, const Catalog& catalog, std::string_view name,
                           std::span<const std::string> object_names, Day day) {
  return memory.teach(name, encode(object_names, catalog), catalog, day);
}

ShortTermMemory::ShortTermMemory(int capacity_days, Day current_day, std::vector<StmRecord> records)
    : capacity_days_(capacity_days), current_day_(current_day), records_(std::move(records)) {
  if (capacity_days_ < 1) throw Error(ErrorCode::InvalidArgument, "STM capacity must be >= 1 day");
  for (const auto& r : records_) {
    if (r.day < window_start() || r.day > current_day_) {
      throw Error(ErrorCode::CorruptState, "STM record outside the retention window");
    }
  }
}

void ShortTermMemory::record(Served served) {
  records_.push_back(StmRecord{current_day_, std::move(served)});
}

Day ShortTermMemory::advance_day() {
  ++current_day_;
  const Day first_kept = window_start();
  std::erase_if(records_, [first_kept](const StmRecord& r) { return r.day < first_kept; });
  return current_day_;
}

void ShortTermMemory::extend_dims(std::size_t dims) {
  for (auto& r : records_) {
    if (auto* s = std::get_if<Surprise>(&r.served)) s->lv = s->lv.zero_extended(dims);
  }
}

void record_served(ShortTermMemory& stm, const EpisodicMemory& memory, Served served) {
  if (const auto* id = std::get_if<EntryId>(&served)) memory.at(*id);
  stm.record(std::move(served));
}

EatenCounts eaten_counts(const ShortTermMemory& stm, std::size_t entry_count) {
  EatenCounts counts{std::vector<std::size_t>(entry_count, 0)};
  for (const auto& r : stm.records()) {
    if (r.day < stm.window_start()) continue;
    if (const auto* id = std::get_if<EntryId>(&r.served); id && *id < entry_count) {
      ++counts.m[*id];
    }
  }
  return counts;
}

EntryId least_eaten(const EpisodicMemory& memory, const ShortTermMemory& stm, Rng& rng) {
  if (memory.empty()) throw Error(ErrorCode::EmptyMemory, "no breakfast options have been taught");
  const auto counts = eaten_counts(stm, memory.size());
  const auto lowest = *std::min_element(counts.m.begin(), counts.m.end());
  std::vector<EntryId> ties;
  for (EntryId i = 0; i < counts.m.size(); ++i) {
    if (counts.m[i] == lowest) ties.push_back(i);
  }
  if (ties.size() == 1) return ties.front();
  return ties[rng.uniform_index(ties.size())];
}

}  // namespace tablesetter
