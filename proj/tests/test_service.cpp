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

#include <filesystem>
#include <thread>

#include <nlohmann/json.hpp>

#include "support/fixtures.hpp"
#include "tablesetter/persistence.hpp"
#include "tablesetter/service.hpp"

// After the core headers: <resolv.h> defines a _res macro that breaks Eigen.
#include <httplib.h>

namespace tablesetter {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::table_one_household;

Service table_one_service(std::uint64_t seed = 0) { return Service(table_one_household(seed)); }

TEST(Service, CatalogListsObjectsInIdOrder) {
  auto s = table_one_service();
  const auto r = s.handle("GET", "/catalog", "");
  ASSERT_EQ(r.status, 200);
  ASSERT_EQ(r.body.size(), 9u);
  EXPECT_EQ(r.body[0]["name"], "milk");
  EXPECT_EQ(r.body[6]["graspable"], false);
}

TEST(Service, AddObjectAndTeach) {
  auto s = table_one_service();
  auto r = s.handle("POST", "/catalog/objects",
                    R"({"name": "toast", "class": "food", "graspable": true})");
  ASSERT_EQ(r.status, 201) << r.body;
  EXPECT_EQ(r.body["id"], 9);

  r = s.handle("POST", "/breakfasts", R"({"name": "toast", "objects": ["toast", "milk"]})");
  ASSERT_EQ(r.status, 201) << r.body;
  r = s.handle("GET", "/breakfasts", "");
  ASSERT_EQ(r.body.size(), 8u);
  EXPECT_EQ(r.body[7]["name"], "toast");
}

TEST(Service, ErrorStatuses) {
  auto s = table_one_service();
  struct Case {
    const char* method;
    const char* path;
    const char* body;
    int status;
    const char* code;
  };
  const std::vector<Case> cases = {
      {"GET", "/nope", "", 404, "NotFound"},
      {"POST", "/catalog", "", 405, "MethodNotAllowed"},
      {"GET", "/serve", "", 405, "MethodNotAllowed"},
      {"POST", "/serve", "{", 400, "BadRequest"},
      {"POST", "/serve", "[]", 400, "BadRequest"},
      {"POST", "/serve", R"({"mode": "fancy"})", 400, "BadRequest"},
      {"POST", "/serve", R"({"mode": "by_name", "name": "nope"})", 404, "UnknownBreakfast"},
      {"POST", "/breakfasts", R"({"name": "milk cup", "objects": ["milk"]})", 409, "DuplicateName"},
      {"POST", "/breakfasts", R"({"name": "again", "objects": ["cup", "milk"]})", 409,
       "DuplicateSetup"},
      {"POST", "/breakfasts", R"({"name": "x", "objects": ["cup"]})", 422, "NoFoodItem"},
      {"POST", "/breakfasts", R"({"name": "x", "objects": ["durian"]})", 422, "UnknownObject"},
      {"POST", "/catalog/objects", R"({"name": "MILK", "class": "food"})", 409, "DuplicateName"},
      {"POST", "/simulate", R"({"n": 100001})", 422, "InvalidArgument"},
  };
  for (const auto& c : cases) {
    const auto r = s.handle(c.method, c.path, c.body);
    EXPECT_EQ(r.status, c.status) << c.method << " " << c.path << " " << c.body;
    EXPECT_EQ(r.body["error"]["code"], c.code) << c.path << " " << c.body;
  }
}

TEST(Service, BadRequestNamesTheField) {
  auto s = table_one_service();
  auto r = s.handle("POST", "/breakfasts", R"({"name": "x"})");
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["error"]["field"], "/objects");
  r = s.handle("POST", "/breakfasts", R"({"name": "x", "objects": ["milk", 3]})");
  EXPECT_EQ(r.body["error"]["field"], "/objects/1");
  r = s.handle("POST", "/catalog/objects", R"({"name": "x", "class": "drink"})");
  EXPECT_EQ(r.body["error"]["field"], "/class");
  r = s.handle("POST", "/simulate", R"({"n": -1})");
  EXPECT_EQ(r.body["error"]["field"], "/n");
}

TEST(Service, EmptyMemoryIsConflict) {
  Service s{Household{}};
  s.handle("POST", "/catalog/objects", R"({"name": "milk", "class": "food"})");
  const auto r = s.handle("POST", "/serve", R"({"mode": "surprise"})");
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(r.body["error"]["code"], "EmptyMemory");
}

TEST(Service, ServeHistoryAndDayAdvance) {
  auto s = table_one_service();
  auto r = s.handle("POST", "/serve", R"({"mode": "by_name", "name": "milk cup banana"})");
  ASSERT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(r.body["robot_fetches"], json({"milk", "cup"}));
  EXPECT_EQ(r.body["user_fetches"], json({"banana"}));
  EXPECT_EQ(r.body["source"]["kind"], "episodic");

  r = s.handle("POST", "/serve", R"({"mode": "surprise"})");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["source"]["kind"], "created");

  r = s.handle("POST", "/day/advance", "");
  EXPECT_EQ(r.body["day"], 1);
  r = s.handle("GET", "/history", "");
  EXPECT_EQ(r.body["day"], 1);
  EXPECT_EQ(r.body["stm_days"], 5);
  ASSERT_EQ(r.body["rows"].size(), 2u);
  EXPECT_EQ(r.body["rows"][1]["served"], "surprise");
}

TEST(Service, SurpriseCanBeSaved) {
  auto s = table_one_service(5);
  const auto plan = s.handle("POST", "/serve", R"({"mode": "surprise"})").body;
  json req = {{"name", "new favourite"}, {"objects", json::array()}};
  for (const auto& o : plan["objects"]) req["objects"].push_back(o["name"]);
  const auto r = s.handle("POST", "/surprise/save", req.dump());
  ASSERT_EQ(r.status, 201) << r.body;
  EXPECT_EQ(s.snapshot().episodic().size(), 8u);
}

TEST(Service, RulesAndValidate) {
  auto s = table_one_service();
  auto r = s.handle("GET", "/rules", "");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["built_from"], 7);
  EXPECT_TRUE(r.body["text"].is_string());

  r = s.handle("POST", "/validate", R"({"objects": ["cereal", "milk", "spoon"]})");
  ASSERT_EQ(r.status, 200);
  EXPECT_FALSE(r.body["valid"]);
  EXPECT_EQ(r.body["fixed"], json({"milk", "cereal", "bowl", "spoon"}));
}

TEST(Service, SimulateCountsAddUp) {
  auto s = table_one_service(11);
  const auto r = s.handle("POST", "/simulate", R"({"n": 200})");
  ASSERT_EQ(r.status, 200) << r.body;
  const auto& b = r.body;
  EXPECT_EQ(b["requested"], 200);
  EXPECT_EQ(b["same_as_memory"].get<int>() + b["duplicate_new"].get<int>() +
                b["distinct_new"].get<int>(),
            200);
  EXPECT_EQ(b["outputs"].size(), b["distinct_new"].get<std::size_t>());
}

TEST(Service, FailedWriteLeavesStateUntouched) {
  auto s = table_one_service();
  const auto before = dump_state(s.snapshot());
  s.handle("POST", "/breakfasts", R"({"name": "x", "objects": ["durian"]})");
  s.handle("POST", "/serve", R"({"mode": "by_name", "name": "nope"})");
  EXPECT_EQ(dump_state(s.snapshot()), before);
}

TEST(Service, WritesArePersisted) {
  const auto dir = fs::temp_directory_path() / "tablesetter_service_persist";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto file = state_file(dir);
  {
    Service s(table_one_household(), file);
    s.handle("POST", "/serve", R"({"mode": "least_eaten"})");
    EXPECT_EQ(dump_state(load_household(file)), dump_state(s.snapshot()));
  }
  fs::remove_all(dir);
}

TEST(HttpServer, LiveRoundTrip) {
  auto s = table_one_service();
  HttpServer server(s, {"127.0.0.1", 0, "*"});
  const int port = server.bind();
  std::thread t([&] { server.listen(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/catalog");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  EXPECT_EQ(json::parse(res->body).size(), 9u);

  res = client.Post("/serve", R"({"mode": "by_name", "name": "milk cup"})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["robot_fetches"], json({"milk", "cup"}));

  res = client.Post("/serve", "{", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);

  server.stop();
  t.join();
}

}  // namespace
}  // namespace tablesetter
