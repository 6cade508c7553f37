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
// State-file persistence. A data directory holds household.json and, while a
// process owns it, an advisory lock on household.lock.

#include <filesystem>
#include <string>
#include <string_view>

#include "tablesetter/household.hpp"

namespace tablesetter {

inline constexpr std::string_view kStateFileName = "household.json";
inline constexpr std::string_view kLockFileName = "household.lock";
inline constexpr std::string_view kDataDirEnv = "TABLESETTER_DATA_DIR";

std::filesystem::path state_file(const std::filesystem::path& data_dir);

std::string dump_state(const Household& household);
Household parse_state(std::string_view text);

/// Writes to a temporary sibling, fsyncs, then renames over `file`.
void save_household(const Household& household, const std::filesystem::path& file);
/// Throws Io when the file is missing, CorruptState when it does not parse.
Household load_household(const std::filesystem::path& file);

/// Exclusive advisory lock on a data directory, released on destruction.
class StateLock {
 public:
  /// Throws StateLocked when another process holds the lock.
  explicit StateLock(const std::filesystem::path& data_dir);
  ~StateLock();
  StateLock(const StateLock&) = delete;
  StateLock& operator=(const StateLock&) = delete;
  StateLock(StateLock&& other) noexcept : fd_(other.fd_) { other.fd_ = -1; }
  StateLock& operator=(StateLock&&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace tablesetter
