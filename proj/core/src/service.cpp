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

#include "tablesetter/service.hpp"

#include <mutex>

#include "tablesetter/codec.hpp"
#include "tablesetter/creativity.hpp"
#include "tablesetter/error.hpp"
#include "tablesetter/kitchen.hpp"
#include "tablesetter/persistence.hpp"
#include "tablesetter/report.hpp"

// After Eigen: <resolv.h> defines a _res macro that breaks Eigen internals.
#include <httplib.h>

namespace tablesetter {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxSimulate = 100000;

// Malformed request body; carries a JSON pointer to the offending field.
struct BadRequest {
  std::string field;
  std::string message;
};

ApiResponse error_response(int status, std::string_view code, const std::string& message,
                           std::optional<std::string> field = std::nullopt) {
  json err = {{"code", code}, {"message", message}};
  if (field) err["field"] = *field;
  return {status, {{"error", err}}};
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownBreakfast:
    case ErrorCode::UnknownEntry:
      return 404;
    case ErrorCode::DuplicateName:
    case ErrorCode::DuplicateSetup:
    case ErrorCode::EmptyMemory:
    case ErrorCode::AttemptsExhausted:
    case ErrorCode::StateLocked:
      return 409;
    case ErrorCode::UnknownObject:
    case ErrorCode::NoFoodItem:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::SameItem:
    case ErrorCode::FoodUnseen:
    case ErrorCode::Unsatisfiable:
      return 422;
    default:
      return 500;
  }
}

json parse_body(std::string_view body) {
  auto doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw BadRequest{"", "request body is not valid JSON"};
  if (!doc.is_object()) throw BadRequest{"", "request body must be a JSON object"};
  return doc;
}

std::string require_string(const json& body, const char* key) {
  if (!body.contains(key)) throw BadRequest{std::string("/") + key, "missing field"};
  const auto& v = body.at(key);
  if (!v.is_string()) throw BadRequest{std::string("/") + key, "expected a string"};
  return v.get<std::string>();
}

std::vector<std::string> require_names(const json& body, const char* key) {
  if (!body.contains(key)) throw BadRequest{std::string("/") + key, "missing field"};
  const auto& v = body.at(key);
  if (!v.is_array()) throw BadRequest{std::string("/") + key, "expected an array of names"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      throw BadRequest{std::string("/") + key + "/" + std::to_string(i), "expected a string"};
    }
    names.push_back(v[i].get<std::string>());
  }
  return names;
}

bool optional_bool(const json& body, const char* key, bool fallback) {
  if (!body.contains(key)) return fallback;
  const auto& v = body.at(key);
  if (!v.is_boolean()) throw BadRequest{std::string("/") + key, "expected a boolean"};
  return v.get<bool>();
}

}  // namespace

Service::Service(Household household, std::optional<std::filesystem::path> state_file)
    : household_(std::move(household)), state_file_(std::move(state_file)) {}

Household Service::snapshot() const {
  std::shared_lock lock(mutex_);
  return household_;
}

template <typename Fn>
ApiResponse Service::read(Fn&& fn) const {
  std::shared_lock lock(mutex_);
  return fn(household_);
}

template <typename Fn>
ApiResponse Service::write(Fn&& fn) {
  std::unique_lock lock(mutex_);
  Household next = household_;
  auto response = fn(next);
  if (state_file_) save_household(next, *state_file_);
  household_ = std::move(next);
  return response;
}

ApiResponse Service::handle(std::string_view method, std::string_view path, std::string_view body) {
  const bool get = method == "GET";
  const bool post = method == "POST";
  try {
    if (path == "/catalog") {
      if (!get) return error_response(405, "MethodNotAllowed", "use GET");
      return read([](const Household& h) { return ApiResponse{200, catalog_to_json(h.catalog())}; });
    }
    if (path == "/catalog/objects") {
      if (!post) return error_response(405, "MethodNotAllowed", "use POST");
      const auto req = parse_body(body);
      const auto name = require_string(req, "name");
      const auto cls_text = require_string(req, "class");
      const auto cls = parse_object_class(cls_text);
      if (!cls) throw BadRequest{"/class", "expected \"food\" or \"utensil\""};
      const bool graspable = optional_bool(req, "graspable", false);
      return write([&](Household& h) {
        const auto id = h.add_object(name, *cls, graspable);
        return ApiResponse{201, object_to_json(h.catalog().at(id))};
      });
    }
    if (path == "/breakfasts") {
      if (get) {
        return read([](const Household& h) {
          return ApiResponse{200, entries_to_json(h.episodic(), h.catalog())};
        });
      }
      if (!post) return error_response(405, "MethodNotAllowed", "use GET or POST");
      const auto req = parse_body(body);
      const auto name = require_string(req, "name");
      const auto objects = require_names(req, "objects");
      return write([&](Household& h) {
        const auto& entry = h.teach(name, objects);
        return ApiResponse{201, entry_to_json(entry, h.catalog())};
      });
    }
    if (path == "/serve") {
      if (!post) return error_response(405, "MethodNotAllowed", "use POST");
      const auto req = parse_body(body);
      const auto mode = require_string(req, "mode");
      ServeRequest request;
      if (mode == "by_name") {
        request = ServeRequest::by_name(require_string(req, "name"));
      } else if (mode == "least_eaten") {
        request = ServeRequest::least_eaten();
      } else if (mode == "surprise") {
        request = ServeRequest::surprise();
      } else {
        throw BadRequest{"/mode", "expected by_name, least_eaten or surprise"};
      }
      return write([&](Household& h) { return ApiResponse{200, plan_to_json(serve(h, request))}; });
    }
    if (path == "/surprise/save") {
      if (!post) return error_response(405, "MethodNotAllowed", "use POST");
      const auto req = parse_body(body);
      const auto name = require_string(req, "name");
      const auto objects = require_names(req, "objects");
      return write([&](Household& h) {
        const auto& entry = h.teach(name, objects);
        return ApiResponse{201, entry_to_json(entry, h.catalog())};
      });
    }
    if (path == "/day/advance") {
      if (!post) return error_response(405, "MethodNotAllowed", "use POST");
      return write([](Household& h) { return ApiResponse{200, {{"day", h.advance_day()}}}; });
    }
    if (path == "/history") {
      if (!get) return error_response(405, "MethodNotAllowed", "use GET");
      return read([](const Household& h) {
        return ApiResponse{200,
                           {{"day", h.current_day()},
                            {"stm_days", h.stm().capacity_days()},
                            {"rows", history_to_json(history(h))}}};
      });
    }
    if (path == "/rules") {
      if (!get) return error_response(405, "MethodNotAllowed", "use GET");
      return read([](const Household& h) {
        auto doc = graph_to_json(h.knowledge_graph(), h.catalog());
        doc["text"] = render_rules(h.knowledge_graph(), h.catalog());
        return ApiResponse{200, doc};
      });
    }
    if (path == "/validate") {
      if (!post) return error_response(405, "MethodNotAllowed", "use POST");
      const auto objects = require_names(parse_body(body), "objects");
      return read([&](const Household& h) {
        const auto lv = encode(objects, h.catalog());
        const auto report = validate(lv, h.knowledge_graph(), h.catalog());
        json doc = {{"valid", report.valid}, {"objects", decode(lv, h.catalog())}};
        doc["text"] = render_validation(report, h.catalog());
        if (!report.no_food) doc["fixed"] = decode(fix(lv, h.knowledge_graph(), h.catalog()), h.catalog());
        return ApiResponse{200, doc};
      });
    }
    if (path == "/simulate") {
      if (!post) return error_response(405, "MethodNotAllowed", "use POST");
      const auto req = parse_body(body);
      if (!req.contains("n")) throw BadRequest{"/n", "missing field"};
      if (!req.at("n").is_number_unsigned()) throw BadRequest{"/n", "expected a non-negative integer"};
      const auto n = req.at("n").get<std::size_t>();
      if (n > kMaxSimulate) {
        return error_response(422, "InvalidArgument",
                              "n must be at most " + std::to_string(kMaxSimulate));
      }
      return write([&](Household& h) {
        auto stats = simulate_batch(h, h.rng(), n);
        return ApiResponse{200, batch_to_json(stats, h.catalog())};
      });
    }
    return error_response(404, "NotFound", "no route for " + std::string(path));
  } catch (const BadRequest& e) {
    return error_response(400, "BadRequest", e.message, e.field.empty() ? "/" : e.field);
  } catch (const Error& e) {
    return error_response(status_for(e.code()), to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return error_response(500, "Internal", e.what());
  }
}

struct HttpServer::Impl {
  Impl(Service& s, HttpOptions o) : service(s), options(std::move(o)) {}
  Service& service;
  HttpOptions options;
  httplib::Server server;
};

HttpServer::HttpServer(Service& service, HttpOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {
  auto& svr = impl_->server;
  const auto origin = impl_->options.cors_origin;
  auto dispatch = [this, origin](const httplib::Request& req, httplib::Response& res) {
    auto out = impl_->service.handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_content(out.body.dump(), "application/json");
  };
  svr.Get(".*", dispatch);
  svr.Post(".*", dispatch);
  svr.Put(".*", dispatch);
  svr.Delete(".*", dispatch);
  svr.Options(".*", [origin](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  auto& opt = impl_->options;
  if (opt.port == 0) {
    const int port = impl_->server.bind_to_any_port(opt.host);
    if (port < 0) throw Error(ErrorCode::Io, "cannot bind " + opt.host);
    opt.port = port;
  } else if (!impl_->server.bind_to_port(opt.host, opt.port)) {
    throw Error(ErrorCode::Io, "cannot bind " + opt.host + ":" + std::to_string(opt.port));
  }
  return opt.port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace tablesetter
