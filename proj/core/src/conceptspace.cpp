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

#include "tablesetter/conceptspace.hpp"

#include <algorithm>
#include <cctype>

#include "tablesetter/error.hpp"

namespace tablesetter {

std::string_view to_string(ObjectClass cls) {
  return cls == ObjectClass::Food ? "food" : "utensil";
}

std::optional<ObjectClass> parse_object_class(std::string_view text) {
  const auto key = name_key(text);
  if (key == "food") return ObjectClass::Food;
  if (key == "utensil") return ObjectClass::Utensil;
  return std::nullopt;
}

std::string trim(std::string_view text) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return std::string(text);
}

std::string name_key(std::string_view name) {
  auto key = trim(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return key;
}

std::size_t ObjectLV::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool ObjectLV::is_subset_of(const ObjectLV& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.test(i)) return false;
  }
  return true;
}

std::vector<ObjectId> ObjectLV::ids() const {
  std::vector<ObjectId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

ObjectLV ObjectLV::zero_extended(std::size_t dims) const {
  if (dims < bits_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot shrink an LV");
  }
  ObjectLV out(dims);
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i];
  return out;
}

ObjectId Catalog::add_object(std::string_view name, ObjectClass cls, bool graspable) {
  auto stored = trim(name);
  if (stored.empty()) {
    throw Error(ErrorCode::InvalidArgument, "object name must not be empty");
  }
  auto key = name_key(stored);
  if (by_key_.contains(key)) {
    throw Error(ErrorCode::DuplicateName, "object already registered: " + stored);
  }
  const ObjectId id = objects_.size();
  auto& same_class = cls == ObjectClass::Food ? foods_ : utensils_;
  class_pos_.push_back(same_class.size());
  same_class.push_back(id);
  objects_.push_back(ObjectSpec{id, std::move(stored), cls, graspable});
  by_key_.emplace(std::move(key), id);
  return id;
}

const ObjectSpec& Catalog::at(ObjectId id) const {
  if (id >= objects_.size()) {
    throw Error(ErrorCode::UnknownObject, "no object with id " + std::to_string(id));
  }
  return objects_[id];
}

std::optional<ObjectId> Catalog::find(std::string_view name) const {
  auto it = by_key_.find(name_key(name));
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

ObjectId Catalog::resolve(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error(ErrorCode::UnknownObject, "unknown object: " + trim(name));
}

const std::vector<ObjectId>& Catalog::ids_of(ObjectClass cls) const {
  return cls == ObjectClass::Food ? foods_ : utensils_;
}

ObjectLV encode(std::span<const std::string> names, const Catalog& catalog) {
  ObjectLV lv(catalog.size());
  for (const auto& name : names) lv.set(catalog.resolve(name));
  return lv;
}

ObjectLV encode(std::initializer_list<std::string_view> names, const Catalog& catalog) {
  ObjectLV lv(catalog.size());
  for (auto name : names) lv.set(catalog.resolve(name));
  return lv;
}

ObjectLV encode_ids(std::span<const ObjectId> ids, const Catalog& catalog) {
  ObjectLV lv(catalog.size());
  for (auto id : ids) lv.set(catalog.at(id).id);
  return lv;
}

namespace {
void require_dims(const ObjectLV& lv, const Catalog& catalog) {
  if (lv.size() != catalog.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "LV has " + std::to_string(lv.size()) + " dimensions, catalog has " +
                    std::to_string(catalog.size()));
  }
}
}  // namespace

std::vector<std::string> decode(const ObjectLV& lv, const Catalog& catalog) {
  require_dims(lv, catalog);
  std::vector<std::string> names;
  for (auto id : lv.ids()) names.push_back(catalog.at(id).name);
  return names;
}

bool has_food(const ObjectLV& lv, const Catalog& catalog) {
  for (auto id : catalog.ids_of(ObjectClass::Food)) {
    if (lv.test(id)) return true;
  }
  return false;
}

FoodContextLV food_context_view(const ObjectLV& lv, const Catalog& catalog) {
  require_dims(lv, catalog);
  FoodContextLV view;
  for (auto id : catalog.ids_of(ObjectClass::Food)) view.food_bits.push_back(lv.test(id));
  for (auto id : catalog.ids_of(ObjectClass::Utensil)) view.utensil_bits.push_back(lv.test(id));
  return view;
}

ObjectLV reassemble(const FoodContextLV& view, const Catalog& catalog) {
  const auto& foods = catalog.ids_of(ObjectClass::Food);
  const auto& utensils = catalog.ids_of(ObjectClass::Utensil);
  if (view.food_bits.size() != foods.size() || view.utensil_bits.size() != utensils.size()) {
    throw Error(ErrorCode::DimensionMismatch, "food-context LV does not match catalog");
  }
  ObjectLV lv(catalog.size());
  for (std::size_t p = 0; p < foods.size(); ++p) lv.set(foods[p], view.food_bits[p]);
  for (std::size_t p = 0; p < utensils.size(); ++p) lv.set(utensils[p], view.utensil_bits[p]);
  return lv;
}

bool contains(const FoodContextLV& view, ObjectId id, const Catalog& catalog) {
  const auto& bits = catalog.is_food(id) ? view.food_bits : view.utensil_bits;
  const auto pos = catalog.class_position(id);
  return pos < bits.size() && bits[pos];
}

}  // namespace tablesetter
