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

#include "tablesetter/kitchen.hpp"

#include "tablesetter/error.hpp"

namespace tablesetter {

ServePlan make_plan(const ObjectLV& lv, const Catalog& catalog, Day day) {
  if (lv.size() != catalog.size()) {
    throw Error(ErrorCode::DimensionMismatch, "setup does not match catalog dimensions");
  }
  ServePlan plan;
  plan.lv = lv;
  plan.day = day;
  for (auto id : lv.ids()) {
    const auto& spec = catalog.at(id);
    plan.objects.push_back(PlanObject{spec.name, spec.graspable});
    (spec.graspable ? plan.robot_fetches : plan.user_fetches).push_back(spec.name);
  }
  return plan;
}

ServePlan serve(Household& household, const ServeRequest& request, Rng& rng,
                std::size_t max_attempts) {
  const auto& memory = household.episodic();
  switch (request.mode) {
    case ServeMode::ByName: {
      if (trim(request.name).empty()) {
        throw Error(ErrorCode::InvalidArgument, "by-name serving needs a breakfast name");
      }
      auto id = memory.find_by_name(request.name);
      if (!id) throw Error(ErrorCode::UnknownBreakfast, "unknown breakfast: " + trim(request.name));
      household.record_served(*id);
      auto plan = make_plan(memory.at(*id).lv, household.catalog(), household.current_day());
      plan.entry = *id;
      plan.entry_name = memory.at(*id).name;
      return plan;
    }
    case ServeMode::LeastEaten: {
      const auto id = least_eaten(memory, household.stm(), rng);
      household.record_served(id);
      auto plan = make_plan(memory.at(id).lv, household.catalog(), household.current_day());
      plan.entry = id;
      plan.entry_name = memory.at(id).name;
      return plan;
    }
    case ServeMode::Surprise: {
      auto lv = create_breakfast(household, rng, max_attempts);
      household.record_served(Surprise{lv});
      auto plan = make_plan(lv, household.catalog(), household.current_day());
      plan.source = PlanSource::Created;
      return plan;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown serve mode");
}

ServePlan serve(Household& household, const ServeRequest& request, std::size_t max_attempts) {
  return serve(household, request, household.rng(), max_attempts);
}

std::vector<HistoryRow> history(const Household& household) {
  const auto& stm = household.stm();
  std::vector<HistoryRow> rows;
  for (const auto& r : stm.records()) {
    if (r.day < stm.window_start()) continue;
    HistoryRow row;
    row.day = r.day;
    if (const auto* id = std::get_if<EntryId>(&r.served)) {
      const auto& entry = household.episodic().at(*id);
      row.entry = *id;
      row.served = entry.name;
      row.objects = decode(entry.lv, household.catalog());
    } else {
      row.served = "surprise";
      row.objects = decode(std::get<Surprise>(r.served).lv, household.catalog());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tablesetter
