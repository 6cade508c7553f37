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
// Novel breakfast generation: a multivariate normal fitted to the taught
// presence vectors is sampled, thresholded back to bits, and repaired with
// the knowledge graph.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "tablesetter/conceptspace.hpp"
#include "tablesetter/household.hpp"
#include "tablesetter/memory.hpp"
#include "tablesetter/rng.hpp"
#include "tablesetter/rules.hpp"

namespace tablesetter {

inline constexpr double kCovarianceJitter = 1e-6;
inline constexpr double kPresenceThreshold = 0.5;
inline constexpr std::size_t kDefaultMaxAttempts = 1000;

struct GaussianModel {
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;   // population covariance plus jitter on the diagonal
  Eigen::MatrixXd factor;  // symmetric square root: factor * factor == sigma
  double jitter = kCovarianceJitter;
};

/// Builds a model from explicit moments. Throws FactorizationFailure when
/// sigma is not symmetric positive semi-definite.
GaussianModel make_gaussian(Eigen::VectorXd mu, Eigen::MatrixXd sigma, double jitter = 0.0);

/// Throws EmptyMemory when `lvs` is empty.
GaussianModel fit_gaussian(std::span<const ObjectLV> lvs, std::size_t dims,
                           double jitter = kCovarianceJitter);
GaussianModel fit_gaussian(const EpisodicMemory& memory, const Catalog& catalog,
                           double jitter = kCovarianceJitter);

struct PseudoLV {
  ObjectLV lv;
  Eigen::VectorXd raw_sample;
};

/// Present iff the coordinate is >= kPresenceThreshold.
ObjectLV threshold(const Eigen::VectorXd& raw);
PseudoLV sample_pseudo_lv(const GaussianModel& model, Rng& rng);

/// Samples until a food-bearing setup that, before and after repair, differs
/// from every taught one. Throws EmptyMemory and AttemptsExhausted.
ObjectLV create_breakfast(const Household& household, Rng& rng,
                          std::size_t max_attempts = kDefaultMaxAttempts);

struct BatchStats {
  std::size_t requested = 0;
  std::size_t same_as_memory = 0;
  std::size_t invalid_before_fix = 0;
  std::size_t duplicate_new = 0;
  std::size_t distinct_new = 0;
  std::vector<ObjectLV> outputs;  // distinct novel setups, in discovery order

  friend bool operator==(const BatchStats&, const BatchStats&) = default;
};

/// n raw generations. Draws matching a taught setup (before or after repair)
/// are counted and discarded rather than resampled. Draws with no food at all
/// are redrawn within the same generation, up to max_attempts times.
BatchStats simulate_batch(const Household& household, Rng& rng, std::size_t n,
                          std::size_t max_attempts = kDefaultMaxAttempts);

}  // namespace tablesetter
