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
// Object catalog and the latent-variable encoding of breakfast setups.
//
// A setup is a binary presence vector over the catalog: bit i is set when
// object i is on the table. The catalog only ever grows, so an LV built
// against an older catalog is made current by zero-extending it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tablesetter {

using ObjectId = std::size_t;

enum class ObjectClass { Food, Utensil };

std::string_view to_string(ObjectClass cls);
/// Accepts "food" / "utensil" in any case.
std::optional<ObjectClass> parse_object_class(std::string_view text);

struct ObjectSpec {
  ObjectId id = 0;
  std::string name;
  ObjectClass cls = ObjectClass::Food;
  bool graspable = false;
};

class ObjectLV {
 public:
  ObjectLV() = default;
  explicit ObjectLV(std::size_t dims) : bits_(dims, false) {}

  std::size_t size() const noexcept { return bits_.size(); }
  bool test(ObjectId id) const { return id < bits_.size() && bits_[id]; }
  void set(ObjectId id, bool value = true) { bits_.at(id) = value; }

  std::size_t count() const;
  bool none() const { return count() == 0; }
  bool is_subset_of(const ObjectLV& other) const;
  /// Ids of set bits, ascending.
  std::vector<ObjectId> ids() const;
  ObjectLV zero_extended(std::size_t dims) const;

  const std::vector<bool>& bits() const noexcept { return bits_; }

  friend bool operator==(const ObjectLV&, const ObjectLV&) = default;
  friend auto operator<=>(const ObjectLV& a, const ObjectLV& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<bool> bits_;
};

struct ObjectLVHash {
  std::size_t operator()(const ObjectLV& lv) const noexcept {
    return std::hash<std::vector<bool>>{}(lv.bits());
  }
};

/// Append-only registry of household objects. Ids are dense and stable.
class Catalog {
 public:
  ObjectId add_object(std::string_view name, ObjectClass cls, bool graspable);

  std::size_t size() const noexcept { return objects_.size(); }
  bool empty() const noexcept { return objects_.empty(); }
  const ObjectSpec& at(ObjectId id) const;
  std::span<const ObjectSpec> objects() const noexcept { return objects_; }

  /// Case-insensitive lookup.
  std::optional<ObjectId> find(std::string_view name) const;
  /// Like find(), but throws UnknownObject.
  ObjectId resolve(std::string_view name) const;

  bool is_food(ObjectId id) const { return at(id).cls == ObjectClass::Food; }
  /// Ids of the given class, ascending.
  const std::vector<ObjectId>& ids_of(ObjectClass cls) const;
  /// Position of `id` within ids_of(its class).
  std::size_t class_position(ObjectId id) const { return class_pos_.at(id); }

 private:
  std::vector<ObjectSpec> objects_;
  std::unordered_map<std::string, ObjectId> by_key_;
  std::vector<ObjectId> foods_;
  std::vector<ObjectId> utensils_;
  std::vector<std::size_t> class_pos_;
};

/// Trimmed, lower-cased lookup key for a name.
std::string name_key(std::string_view name);
std::string trim(std::string_view text);

ObjectLV encode(std::span<const std::string> names, const Catalog& catalog);
ObjectLV encode(std::initializer_list<std::string_view> names, const Catalog& catalog);
ObjectLV encode_ids(std::span<const ObjectId> ids, const Catalog& catalog);

/// Object names in ascending id order.
std::vector<std::string> decode(const ObjectLV& lv, const Catalog& catalog);

bool has_food(const ObjectLV& lv, const Catalog& catalog);

/// The same setup split by object class. Bits are indexed by position
/// within Catalog::ids_of(class).
struct FoodContextLV {
  std::vector<bool> food_bits;
  std::vector<bool> utensil_bits;

  friend bool operator==(const FoodContextLV&, const FoodContextLV&) = default;
};

FoodContextLV food_context_view(const ObjectLV& lv, const Catalog& catalog);
/// Inverse of food_context_view.
ObjectLV reassemble(const FoodContextLV& view, const Catalog& catalog);
/// Presence of object `id` in a food-context LV.
bool contains(const FoodContextLV& view, ObjectId id, const Catalog& catalog);

}  // namespace tablesetter
