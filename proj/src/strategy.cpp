// Copyright 2026 The Infoshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infoshare/strategy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "infoshare/errors.hpp"

namespace infoshare {

Strategy validate(const Eigen::Vector3d& raw) {
  static constexpr const char* kNames[] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(raw[i]) || raw[i] < 0.0 || raw[i] > 1.0) {
      throw ValidationError(std::string("strategy component ") + kNames[i] +
                            " = " + std::to_string(raw[i]) +
                            " outside [0, 1]");
    }
  }
  const double sum = raw.sum();
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw ValidationError("strategy components sum to " + std::to_string(sum) +
                          ", expected 1");
  }
  return Strategy(raw);
}

Strategy renormalize(const Eigen::Vector3d& raw) {
  if (!raw.allFinite()) throw DomainError("renormalize: non-finite component");
  if (raw.minCoeff() < -kSimplexTolerance) {
    throw DomainError("renormalize: component below zero beyond tolerance");
  }
  const Eigen::Vector3d clamped = raw.cwiseMax(0.0);
  const double sum = clamped.sum();
  if (!(sum > 0.0)) throw DomainError("renormalize: zero total mass");
  // Already on the simplex up to rounding: leave it bit-for-bit unchanged.
  if (std::abs(sum - 1.0) <= 8 * std::numeric_limits<double>::epsilon()) {
    return Strategy(clamped);
  }
  Eigen::Vector3d v = clamped / sum;
  // Push the residual rounding error into the largest component so the sum
  // is as close to 1 as double arithmetic allows.
  Eigen::Index largest = 0;
  v.maxCoeff(&largest);
  v[largest] = 0.0;
  v[largest] = std::max(0.0, 1.0 - v.sum());
  return Strategy(v);
}

StrategyProfile::StrategyProfile(std::span<const Strategy> strategies)
    : m_(static_cast<Eigen::Index>(strategies.size()), 3) {
  for (std::size_t j = 0; j < strategies.size(); ++j) {
    m_.row(static_cast<Eigen::Index>(j)) = strategies[j].vector().transpose();
  }
}

StrategyProfile::StrategyProfile(std::size_t n, const Strategy& s)
    : m_(static_cast<Eigen::Index>(n), 3) {
  m_.rowwise() = s.vector().transpose();
}

StrategyProfile StrategyProfile::from_matrix(const Eigen::MatrixX3d& m) {
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    validate(Eigen::Vector3d(m.row(j).transpose()));
  }
  return StrategyProfile(m);
}

Strategy StrategyProfile::operator[](std::size_t j) const {
  return Strategy(m_.row(static_cast<Eigen::Index>(j)).transpose());
}

}  // namespace infoshare
