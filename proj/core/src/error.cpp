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

#include "tablesetter/error.hpp"

namespace tablesetter {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::DuplicateSetup: return "DuplicateSetup";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::UnknownBreakfast: return "UnknownBreakfast";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoFoodItem: return "NoFoodItem";
    case ErrorCode::EmptyMemory: return "EmptyMemory";
    case ErrorCode::SameItem: return "SameItem";
    case ErrorCode::FoodUnseen: return "FoodUnseen";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::AttemptsExhausted: return "AttemptsExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CorruptState: return "CorruptState";
    case ErrorCode::StateLocked: return "StateLocked";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace tablesetter
