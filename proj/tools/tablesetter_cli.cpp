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

// tablesetter: command-line front end over a household data directory.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <pthread.h>
#include <thread>

#include "tablesetter/codec.hpp"
#include "tablesetter/creativity.hpp"
#include "tablesetter/error.hpp"
#include "tablesetter/household.hpp"
#include "tablesetter/kitchen.hpp"
#include "tablesetter/persistence.hpp"
#include "tablesetter/report.hpp"
#include "tablesetter/rules.hpp"
#include "tablesetter/service.hpp"

namespace fs = std::filesystem;
using namespace tablesetter;

namespace {

struct Options {
  std::string data_dir = ".tablesetter";
  bool json = false;

  int stm_days = kDefaultStmDays;
  std::uint64_t seed = 0;
  bool force = false;

  std::string name;
  std::string cls;
  bool graspable = false;
  std::vector<std::string> objects;

  std::string serve_name;
  bool least_eaten = false;
  bool surprise = false;

  std::size_t n = 0;
  std::string report_path;

  std::string host = "127.0.0.1";
  int port = kDefaultPort;
  std::string cors_origin = "*";
};

void emit(const Options& opt, const nlohmann::json& doc, const std::string& text) {
  if (opt.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

// Loads the household under the data-dir lock, runs `fn`, and saves when
// `fn` reports a mutation.
template <typename Fn>
void with_household(const Options& opt, bool mutates, Fn&& fn) {
  const fs::path dir(opt.data_dir);
  StateLock lock(dir);
  auto household = load_household(state_file(dir));
  fn(household);
  if (mutates) save_household(household, state_file(dir));
}

void cmd_init(const Options& opt) {
  const fs::path dir(opt.data_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
  StateLock lock(dir);
  if (fs::exists(state_file(dir)) && !opt.force) {
    throw Error(ErrorCode::InvalidArgument,
                "household already exists at " + dir.string() + " (use --force to overwrite)");
  }
  Household household(opt.stm_days, opt.seed);
  save_household(household, state_file(dir));
  emit(opt, {{"data_dir", dir.string()}, {"stm_days", opt.stm_days}, {"seed", opt.seed}},
       "initialized " + dir.string() + " (stm_days=" + std::to_string(opt.stm_days) +
           ", seed=" + std::to_string(opt.seed) + ")\n");
}

void cmd_object_add(const Options& opt) {
  const auto cls = parse_object_class(opt.cls);
  if (!cls) throw Error(ErrorCode::InvalidArgument, "--class must be food or utensil");
  with_household(opt, true, [&](Household& h) {
    const auto id = h.add_object(opt.name, *cls, opt.graspable);
    const auto& spec = h.catalog().at(id);
    emit(opt, object_to_json(spec), "added " + spec.name + " as id " + std::to_string(id) + "\n");
  });
}

void cmd_object_list(const Options& opt) {
  with_household(opt, false, [&](Household& h) {
    emit(opt, catalog_to_json(h.catalog()), render_catalog(h.catalog()));
  });
}

void cmd_teach(const Options& opt) {
  with_household(opt, true, [&](Household& h) {
    const auto& entry = h.teach(opt.name, opt.objects);
    emit(opt, entry_to_json(entry, h.catalog()),
         "taught " + entry.name + " as id " + std::to_string(entry.id) + ": " +
             join(decode(entry.lv, h.catalog())) + "\n");
  });
}

void cmd_list(const Options& opt) {
  with_household(opt, false, [&](Household& h) {
    emit(opt, entries_to_json(h.episodic(), h.catalog()), render_entries(h.episodic(), h.catalog()));
  });
}

void cmd_serve(const Options& opt) {
  ServeRequest request = ServeRequest::least_eaten();
  if (!opt.serve_name.empty()) request = ServeRequest::by_name(opt.serve_name);
  if (opt.surprise) request = ServeRequest::surprise();
  with_household(opt, true, [&](Household& h) {
    const auto plan = serve(h, request);
    emit(opt, plan_to_json(plan), render_plan(plan));
  });
}

void cmd_day_advance(const Options& opt) {
  with_household(opt, true, [&](Household& h) {
    const auto day = h.advance_day();
    emit(opt, {{"day", day}}, "day " + std::to_string(day) + "\n");
  });
}

void cmd_history(const Options& opt) {
  with_household(opt, false, [&](Household& h) {
    const auto rows = history(h);
    emit(opt,
         {{"day", h.current_day()},
          {"stm_days", h.stm().capacity_days()},
          {"rows", history_to_json(rows)}},
         render_history(rows));
  });
}

void cmd_rules(const Options& opt) {
  with_household(opt, false, [&](Household& h) {
    emit(opt, graph_to_json(h.knowledge_graph(), h.catalog()),
         render_rules(h.knowledge_graph(), h.catalog()));
  });
}

void cmd_check(const Options& opt) {
  with_household(opt, false, [&](Household& h) {
    const auto lv = encode(opt.objects, h.catalog());
    const auto report = validate(lv, h.knowledge_graph(), h.catalog());
    auto text = render_validation(report, h.catalog());
    nlohmann::json doc = {{"valid", report.valid}, {"objects", decode(lv, h.catalog())}};
    if (!report.no_food) {
      const auto fixed = decode(fix(lv, h.knowledge_graph(), h.catalog()), h.catalog());
      text += "fixed: " + join(fixed) + "\n";
      doc["fixed"] = fixed;
    }
    emit(opt, doc, text);
  });
}

void cmd_simulate(const Options& opt) {
  with_household(opt, true, [&](Household& h) {
    const auto stats = simulate_batch(h, h.rng(), opt.n);
    const auto doc = batch_to_json(stats, h.catalog());
    if (!opt.report_path.empty()) {
      std::ofstream out(opt.report_path);
      if (!out) throw Error(ErrorCode::Io, "cannot write " + opt.report_path);
      out << doc.dump(2) << "\n";
    }
    emit(opt, doc, render_batch(stats, h.catalog()));
  });
}

void cmd_serve_http(const Options& opt) {
  const fs::path dir(opt.data_dir);
  StateLock lock(dir);
  Service service(load_household(state_file(dir)), state_file(dir));

  // Route SIGINT/SIGTERM to a watcher thread so shutdown happens outside a
  // signal handler.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  HttpServer server(service, HttpOptions{opt.host, opt.port, opt.cors_origin});
  const int port = server.bind();
  std::cout << "listening on http://" << opt.host << ":" << port << std::endl;

  std::thread watcher([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  server.listen();
  // listen() also returns on a fatal socket error; wake the watcher.
  pthread_kill(watcher.native_handle(), SIGTERM);
  watcher.join();
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv(std::string(kDataDirEnv).c_str()); env && *env) {
    opt.data_dir = env;
  }

  CLI::App app{"tablesetter: learn breakfast setups, serve them, and invent new ones"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--data-dir", opt.data_dir, "Household directory (env TABLESETTER_DATA_DIR)");
  app.add_flag("--json", opt.json, "Machine-readable output");

  auto* init = app.add_subcommand("init", "Create a household");
  init->add_option("--stm-days", opt.stm_days, "Short-term memory window in days")
      ->check(CLI::PositiveNumber);
  init->add_option("--seed", opt.seed, "Seed of the household random stream");
  init->add_flag("--force", opt.force, "Overwrite an existing household");

  auto* object = app.add_subcommand("object", "Manage the object catalog");
  object->require_subcommand(1);
  auto* object_add = object->add_subcommand("add", "Register an object");
  object_add->add_option("name", opt.name, "Object name")->required();
  object_add->add_option("--class", opt.cls, "food or utensil")
      ->required()
      ->check(CLI::IsMember({"food", "utensil"}, CLI::ignore_case));
  object_add->add_flag("--graspable", opt.graspable, "The robot can fetch it");
  auto* object_list = object->add_subcommand("list", "List the catalog");

  auto* teach = app.add_subcommand("teach", "Teach a named breakfast setup");
  teach->add_option("name", opt.name, "Breakfast name")->required();
  teach->add_option("--objects", opt.objects, "Comma-separated object names")
      ->required()
      ->delimiter(',');

  auto* list = app.add_subcommand("list", "List taught breakfasts");

  auto* serve_cmd = app.add_subcommand("serve", "Set the table (least-eaten by default)");
  auto* by_name = serve_cmd->add_option("--name", opt.serve_name, "A taught breakfast");
  auto* least = serve_cmd->add_flag("--least-eaten", opt.least_eaten, "Least eaten in the window");
  auto* surprise = serve_cmd->add_flag("--surprise", opt.surprise, "Create a new breakfast");
  by_name->excludes(least)->excludes(surprise);
  least->excludes(surprise);

  auto* day = app.add_subcommand("day", "Simulated calendar");
  day->require_subcommand(1);
  auto* day_advance = day->add_subcommand("advance", "Move to the next day");

  auto* hist = app.add_subcommand("history", "Servings inside the STM window");
  auto* rules = app.add_subcommand("rules", "Dump the inferred knowledge graph");

  auto* check = app.add_subcommand("check", "Validate a setup and show its repair");
  check->add_option("--objects", opt.objects, "Comma-separated object names")
      ->required()
      ->delimiter(',');

  auto* simulate = app.add_subcommand("simulate", "Run a batch of raw generations");
  simulate->add_option("--n", opt.n, "Number of generations")->required();
  simulate->add_option("--report", opt.report_path, "Also write the JSON report here");

  auto* http = app.add_subcommand("serve-http", "Run the HTTP service");
  http->add_option("--port", opt.port, "TCP port")->check(CLI::Range(0, 65535));
  http->add_option("--host", opt.host, "Bind address");
  http->add_option("--cors-origin", opt.cors_origin, "Access-Control-Allow-Origin value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*init) cmd_init(opt);
    else if (*object_add) cmd_object_add(opt);
    else if (*object_list) cmd_object_list(opt);
    else if (*teach) cmd_teach(opt);
    else if (*list) cmd_list(opt);
    else if (*serve_cmd) cmd_serve(opt);
    else if (*day_advance) cmd_day_advance(opt);
    else if (*hist) cmd_history(opt);
    else if (*rules) cmd_rules(opt);
    else if (*check) cmd_check(opt);
    else if (*simulate) cmd_simulate(opt);
    else if (*http) cmd_serve_http(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
