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
// Episodic memory (user-taught breakfast options) and the k-day short-term
// memory of what was served.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tablesetter/conceptspace.hpp"
#include "tablesetter/rng.hpp"

namespace tablesetter {

using EntryId = std::size_t;
using Day = std::int64_t;

inline constexpr int kDefaultStmDays = 5;

struct EpisodicEntry {
  EntryId id = 0;
  std::string name;
  ObjectLV lv;
  Day taught_on_day = 0;
};

class EpisodicMemory {
 public:
  /// Stores a new option. Throws DuplicateName, DuplicateSetup, NoFoodItem,
  /// DimensionMismatch.
  const EpisodicEntry& teach(std::string_view name, const ObjectLV& lv, const Catalog& catalog,
                             Day day);

  std::span<const EpisodicEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const EpisodicEntry& at(EntryId id) const;
  std::optional<EntryId> find_by_name(std::string_view name) const;
  std::optional<EntryId> find_setup(const ObjectLV& lv) const;
  std::vector<ObjectLV> lvs() const;

  /// Zero-extends every stored LV after the catalog grew.
  void extend_dims(std::size_t dims);

 private:
  std::vector<EpisodicEntry> entries_;
};

/// Names are resolved against the catalog before storing.
const EpisodicEntry& teach(EpisodicMemory& memory, const Catalog& catalog, std::string_view name,
                           std::span<const std::string> object_names, Day day);

struct Surprise {
  ObjectLV lv;
  friend bool operator==(const Surprise&, const Surprise&) = default;
};

using Served = std::variant<EntryId, Surprise>;

struct StmRecord {
  Day day = 0;
  Served served;
  friend bool operator==(const StmRecord&, const StmRecord&) = default;
};

/// Servings over the most recent k day indices, today included.
class ShortTermMemory {
 public:
  explicit ShortTermMemory(int capacity_days = kDefaultStmDays, Day current_day = 0,
                           std::vector<StmRecord> records = {});

  int capacity_days() const noexcept { return capacity_days_; }
  Day current_day() const noexcept { return current_day_; }
  std::span<const StmRecord> records() const noexcept { return records_; }
  /// Oldest day still inside the window.
  Day window_start() const noexcept { return current_day_ - capacity_days_ + 1; }

  void record(Served served);
  Day advance_day();
  void extend_dims(std::size_t dims);

 private:
  int capacity_days_;
  Day current_day_;
  std::vector<StmRecord> records_;
};

/// Throws UnknownEntry for an id outside the episodic memory.
void record_served(ShortTermMemory& stm, const EpisodicMemory& memory, Served served);

struct EatenCounts {
  std::vector<std::size_t> m;
};

/// Servings of each episodic option inside the window; surprises excluded.
EatenCounts eaten_counts(const ShortTermMemory& stm, std::size_t entry_count);

/// An option with minimal count; ties resolved uniformly with `rng`.
/// Throws EmptyMemory.
EntryId least_eaten(const EpisodicMemory& memory, const ShortTermMemory& stm, Rng& rng);

}  // namespace tablesetter
