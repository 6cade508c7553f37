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
// Serving: turns a request into a simulated fetch plan and logs it in STM.
// Graspable objects are fetched by the robot, the rest by the user.

#include <optional>
#include <string>
#include <vector>

#include "tablesetter/creativity.hpp"
#include "tablesetter/household.hpp"

namespace tablesetter {

enum class ServeMode { ByName, LeastEaten, Surprise };

struct ServeRequest {
  ServeMode mode = ServeMode::LeastEaten;
  std::string name;  // ByName only

  static ServeRequest by_name(std::string name) { return {ServeMode::ByName, std::move(name)}; }
  static ServeRequest least_eaten() { return {ServeMode::LeastEaten, {}}; }
  static ServeRequest surprise() { return {ServeMode::Surprise, {}}; }
};

enum class PlanSource { Episodic, Created };

struct PlanObject {
  std::string name;
  bool graspable = false;
  friend bool operator==(const PlanObject&, const PlanObject&) = default;
};

struct ServePlan {
  PlanSource source = PlanSource::Episodic;
  std::optional<EntryId> entry;  // set for Episodic
  std::string entry_name;        // empty for Created
  ObjectLV lv;
  std::vector<PlanObject> objects;  // ascending object id
  std::vector<std::string> robot_fetches;
  std::vector<std::string> user_fetches;
  Day day = 0;

  friend bool operator==(const ServePlan&, const ServePlan&) = default;
};

/// Splits a setup into robot- and user-fetched objects.
ServePlan make_plan(const ObjectLV& lv, const Catalog& catalog, Day day);

/// Resolves the request, records the serving and returns the plan.
/// Throws UnknownBreakfast, EmptyMemory, AttemptsExhausted.
ServePlan serve(Household& household, const ServeRequest& request, Rng& rng,
                std::size_t max_attempts = kDefaultMaxAttempts);
/// Uses the household's own random stream.
ServePlan serve(Household& household, const ServeRequest& request,
                std::size_t max_attempts = kDefaultMaxAttempts);

struct HistoryRow {
  Day day = 0;
  std::optional<EntryId> entry;  // empty for surprises
  std::string served;            // entry name or "surprise"
  std::vector<std::string> objects;

  friend bool operator==(const HistoryRow&, const HistoryRow&) = default;
};

/// In-window servings, oldest first.
std::vector<HistoryRow> history(const Household& household);

}  // namespace tablesetter
