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
// JSON-over-HTTP front end for one household.
//
// Service::handle() is the whole API as a pure request -> response function;
// HttpServer only adapts it to sockets. Writes are serialized and applied to
// a copy that is persisted before it replaces the live state, so readers
// never observe a half-applied mutation and a failed save changes nothing.

#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tablesetter/household.hpp"

namespace tablesetter {

inline constexpr int kDefaultPort = 7420;

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

class Service {
 public:
  explicit Service(Household household, std::optional<std::filesystem::path> state_file = {});

  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body);
  Household snapshot() const;

 private:
  template <typename Fn>
  ApiResponse read(Fn&& fn) const;
  template <typename Fn>
  ApiResponse write(Fn&& fn);

  mutable std::shared_mutex mutex_;
  Household household_;
  std::optional<std::filesystem::path> state_file_;
};

struct HttpOptions {
  std::string host = "127.0.0.1";
  int port = kDefaultPort;  // 0 picks a free port
  std::string cors_origin = "*";
};

class HttpServer {
 public:
  HttpServer(Service& service, HttpOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket; returns the bound port. Throws Io on failure.
  int bind();
  /// Blocks serving requests until stop().
  void listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tablesetter
