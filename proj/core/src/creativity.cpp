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

#include "tablesetter/creativity.hpp"

#include <set>
#include <unordered_set>

#include <Eigen/Eigenvalues>

#include "tablesetter/error.hpp"

namespace tablesetter {

GaussianModel make_gaussian(Eigen::VectorXd mu, Eigen::MatrixXd sigma, double jitter) {
  const auto d = mu.size();
  if (sigma.rows() != d || sigma.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "covariance does not match mean dimension");
  }
  if (!sigma.isApprox(sigma.transpose(), 1e-12) && d > 0) {
    throw Error(ErrorCode::FactorizationFailure, "covariance is not symmetric");
  }
  GaussianModel model;
  model.mu = std::move(mu);
  model.sigma = std::move(sigma);
  model.jitter = jitter;
  if (d == 0) {
    model.factor = Eigen::MatrixXd(0, 0);
    return model;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(model.sigma);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::FactorizationFailure, "eigendecomposition of covariance failed");
  }
  Eigen::VectorXd values = eig.eigenvalues();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] < -1e-10 * scale) {
      throw Error(ErrorCode::FactorizationFailure, "covariance is not positive semi-definite");
    }
    values[i] = std::sqrt(std::max(values[i], 0.0));
  }
  const auto& vectors = eig.eigenvectors();
  model.factor = vectors * values.asDiagonal() * vectors.transpose();
  return model;
}

GaussianModel fit_gaussian(std::span<const ObjectLV> lvs, std::size_t dims, double jitter) {
  if (lvs.empty()) throw Error(ErrorCode::EmptyMemory, "no breakfast options have been taught");
  const auto d = static_cast<Eigen::Index>(dims);
  Eigen::MatrixXd data(static_cast<Eigen::Index>(lvs.size()), d);
  for (std::size_t q = 0; q < lvs.size(); ++q) {
    if (lvs[q].size() != dims) {
      throw Error(ErrorCode::DimensionMismatch, "LV does not match catalog dimensions");
    }
    for (Eigen::Index i = 0; i < d; ++i) {
      data(static_cast<Eigen::Index>(q), i) = lvs[q].test(static_cast<ObjectId>(i)) ? 1.0 : 0.0;
    }
  }
  const double n = static_cast<double>(lvs.size());
  Eigen::VectorXd mu = data.colwise().mean().transpose();
  Eigen::MatrixXd centered = data.rowwise() - mu.transpose();
  Eigen::MatrixXd sigma = (centered.transpose() * centered) / n;
  sigma.diagonal().array() += jitter;
  return make_gaussian(std::move(mu), std::move(sigma), jitter);
}

GaussianModel fit_gaussian(const EpisodicMemory& memory, const Catalog& catalog, double jitter) {
  const auto lvs = memory.lvs();
  return fit_gaussian(std::span<const ObjectLV>(lvs), catalog.size(), jitter);
}

ObjectLV threshold(const Eigen::VectorXd& raw) {
  ObjectLV lv(static_cast<std::size_t>(raw.size()));
  for (Eigen::Index i = 0; i < raw.size(); ++i) {
    if (raw[i] >= kPresenceThreshold) lv.set(static_cast<ObjectId>(i));
  }
  return lv;
}

PseudoLV sample_pseudo_lv(const GaussianModel& model, Rng& rng) {
  Eigen::VectorXd z(model.mu.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = rng.normal();
  Eigen::VectorXd raw = model.mu + model.factor * z;
  auto lv = threshold(raw);
  return PseudoLV{std::move(lv), std::move(raw)};
}

namespace {

using LVSet = std::unordered_set<ObjectLV, ObjectLVHash>;

LVSet taught_setups(const EpisodicMemory& memory) {
  LVSet out;
  for (const auto& e : memory.entries()) out.insert(e.lv);
  return out;
}

}  // namespace

ObjectLV create_breakfast(const Household& household, Rng& rng, std::size_t max_attempts) {
  const auto& catalog = household.catalog();
  const auto model = fit_gaussian(household.episodic(), catalog);
  const auto taught = taught_setups(household.episodic());
  const auto& graph = household.knowledge_graph();

  for (std::size_t rejected = 0; rejected < max_attempts; ++rejected) {
    auto sample = sample_pseudo_lv(model, rng);
    if (!has_food(sample.lv, catalog) || taught.contains(sample.lv)) continue;
    auto repaired = fix(sample.lv, graph, catalog);
    if (taught.contains(repaired)) continue;
    return repaired;
  }
  throw Error(ErrorCode::AttemptsExhausted,
              "no novel breakfast found in " + std::to_string(max_attempts) + " attempts");
}

BatchStats simulate_batch(const Household& household, Rng& rng, std::size_t n,
                          std::size_t max_attempts) {
  BatchStats stats;
  stats.requested = n;
  if (n == 0) return stats;

  const auto& catalog = household.catalog();
  const auto model = fit_gaussian(household.episodic(), catalog);
  const auto taught = taught_setups(household.episodic());
  const auto& graph = household.knowledge_graph();
  LVSet seen;

  for (std::size_t draw = 0; draw < n; ++draw) {
    PseudoLV sample;
    std::size_t tries = 0;
    do {
      if (tries++ == max_attempts) {
        throw Error(ErrorCode::AttemptsExhausted, "sampler keeps producing setups without food");
      }
      sample = sample_pseudo_lv(model, rng);
    } while (!has_food(sample.lv, catalog));

    if (taught.contains(sample.lv)) {
      ++stats.same_as_memory;
      continue;
    }
    const bool was_valid = validate(sample.lv, graph, catalog).valid;
    auto repaired = was_valid ? sample.lv : fix(sample.lv, graph, catalog);
    if (taught.contains(repaired)) {
      ++stats.same_as_memory;
      continue;
    }
    if (!was_valid) ++stats.invalid_before_fix;
    if (seen.insert(repaired).second) {
      ++stats.distinct_new;
      stats.outputs.push_back(std::move(repaired));
    } else {
      ++stats.duplicate_new;
    }
  }
  return stats;
}

}  // namespace tablesetter
