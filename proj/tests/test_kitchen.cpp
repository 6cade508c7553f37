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

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "tablesetter/error.hpp"
#include "tablesetter/kitchen.hpp"

namespace tablesetter {
namespace {

using testing::argmin_set;
using testing::table_one_household;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::Io;
}

TEST(Serve, ByNameSplitsFetchesByGraspability) {
  auto h = table_one_household();
  const auto plan = serve(h, ServeRequest::by_name("milk cup banana"));
  EXPECT_EQ(plan.source, PlanSource::Episodic);
  EXPECT_EQ(plan.entry, EntryId{1});
  EXPECT_EQ(plan.robot_fetches, (std::vector<std::string>{"milk", "cup"}));
  EXPECT_EQ(plan.user_fetches, (std::vector<std::string>{"banana"}));
  EXPECT_EQ(plan.day, 0);
}

TEST(Serve, ByNameIsCaseInsensitive) {
  auto h = table_one_household();
  EXPECT_EQ(serve(h, ServeRequest::by_name("  MILK CUP ")).entry, EntryId{0});
}

TEST(Serve, UnknownBreakfast) {
  auto h = table_one_household();
  EXPECT_EQ(code_of([&] { serve(h, ServeRequest::by_name("nope")); }), ErrorCode::UnknownBreakfast);
  EXPECT_TRUE(h.stm().records().empty());
}

TEST(Serve, EmptyMemory) {
  Household h;
  h.add_object("milk", ObjectClass::Food, true);
  EXPECT_EQ(code_of([&] { serve(h, ServeRequest::least_eaten()); }), ErrorCode::EmptyMemory);
  EXPECT_EQ(code_of([&] { serve(h, ServeRequest::surprise()); }), ErrorCode::EmptyMemory);
}

TEST(Serve, LeastEatenTieIsSeedDeterministic) {
  auto a = table_one_household(123);
  auto b = table_one_household(123);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(serve(a, ServeRequest::least_eaten()), serve(b, ServeRequest::least_eaten()));
  }
}

TEST(Serve, SurpriseIsCreatedValidAndNovel) {
  auto h = table_one_household(9);
  const auto plan = serve(h, ServeRequest::surprise());
  EXPECT_EQ(plan.source, PlanSource::Created);
  EXPECT_FALSE(plan.entry.has_value());
  EXPECT_TRUE(validate(plan.lv, h.knowledge_graph(), h.catalog()).valid);
  EXPECT_FALSE(h.episodic().find_setup(plan.lv).has_value());
}

TEST(Serve, EachServeLogsOnceAndCountsOnlyEpisodic) {
  auto h = table_one_household(4);
  std::mt19937_64 gen(4);
  for (int i = 0; i < 60; ++i) {
    const auto before = eaten_counts(h.stm(), h.episodic().size()).m;
    const auto records = h.stm().records().size();
    ServeRequest req;
    switch (gen() % 3) {
      case 0: req = ServeRequest::by_name(h.episodic().at(gen() % 7).name); break;
      case 1: req = ServeRequest::least_eaten(); break;
      default: req = ServeRequest::surprise();
    }
    const auto plan = serve(h, req);
    ASSERT_EQ(h.stm().records().size(), records + 1);
    const auto after = eaten_counts(h.stm(), h.episodic().size()).m;
    std::size_t increments = 0;
    for (std::size_t k = 0; k < after.size(); ++k) increments += after[k] - before[k];
    ASSERT_EQ(increments, req.mode == ServeMode::Surprise ? 0u : 1u);
    if (plan.entry) ASSERT_EQ(after[*plan.entry], before[*plan.entry] + 1);
  }
}

TEST(Serve, PlanPartitionProperty) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = testing::random_household(gen);
    const auto& c = h.catalog();
    ObjectLV lv(c.size());
    for (ObjectId id = 0; id < c.size(); ++id) lv.set(id, gen() % 2 == 0);
    const auto plan = make_plan(lv, c, 0);
    std::set<std::string> robot(plan.robot_fetches.begin(), plan.robot_fetches.end());
    std::set<std::string> user(plan.user_fetches.begin(), plan.user_fetches.end());
    ASSERT_EQ(robot.size() + user.size(), plan.objects.size());
    for (const auto& o : plan.objects) {
      ASSERT_EQ(robot.contains(o.name), o.graspable);
      ASSERT_EQ(user.contains(o.name), !o.graspable);
    }
  }
}

// Fifteen requests with the 5th, 10th and 15th left to short-term memory:
// every memory-driven pick is one of the least eaten options.
TEST(Serve, MemoryDrivenRequestsPickTheLeastEaten) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto h = table_one_household(seed);
    std::mt19937_64 gen(seed);
    for (int run = 1; run <= 15; ++run) {
      if (run % 5 == 0) {
        const auto counts = eaten_counts(h.stm(), h.episodic().size()).m;
        const auto plan = serve(h, ServeRequest::least_eaten());
        ASSERT_TRUE(argmin_set(counts).contains(*plan.entry));
      } else {
        serve(h, ServeRequest::by_name(h.episodic().at(gen() % 7).name));
      }
    }
  }
}

TEST(History, ThreeServesOnDayZero) {
  auto h = table_one_household();
  serve(h, ServeRequest::by_name("milk cup"));
  serve(h, ServeRequest::least_eaten());
  serve(h, ServeRequest::surprise());
  const auto rows = history(h);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) EXPECT_EQ(r.day, 0);
  EXPECT_EQ(rows[0].served, "milk cup");
  EXPECT_EQ(rows[0].objects, (std::vector<std::string>{"milk", "cup"}));
  EXPECT_EQ(rows[2].served, "surprise");
  EXPECT_FALSE(rows[2].entry.has_value());
}

TEST(History, EvictedRowsDisappear) {
  auto h = table_one_household(0, 2);
  serve(h, ServeRequest::by_name("milk cup"));
  h.advance_day();
  serve(h, ServeRequest::by_name("milk cup banana"));
  EXPECT_EQ(history(h).size(), 2u);
  h.advance_day();
  const auto rows = history(h);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].day, 1);
  EXPECT_EQ(rows[0].served, "milk cup banana");
}

TEST(History, EmptyStm) {
  const auto h = table_one_household();
  EXPECT_TRUE(history(h).empty());
}

}  // namespace
}  // namespace tablesetter
