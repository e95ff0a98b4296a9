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

#ifndef INFOSHARE_STRATEGY_HPP_
#define INFOSHARE_STRATEGY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace infoshare {

// Allowed deviation of x + y + z from 1.
inline constexpr double kSimplexTolerance = 1e-9;

// A point (x, y, z) on the 2-simplex: the proportions of an information type
// a player releases, withholds and lies about. Only constructible through
// validate() / renormalize(), so every instance satisfies the simplex
// invariants.
class Strategy {
 public:
  // Full release, (1, 0, 0).
  Strategy() : v_(1.0, 0.0, 0.0) {}

  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  const Eigen::Vector3d& vector() const { return v_; }

  // Released-plus-lied mass x + z.
  double disclosed() const { return v_.x() + v_.z(); }

  friend bool operator==(const Strategy& a, const Strategy& b) {
    return a.v_ == b.v_;
  }

 private:
  explicit Strategy(const Eigen::Vector3d& v) : v_(v) {}
  friend Strategy validate(const Eigen::Vector3d& raw);
  friend Strategy renormalize(const Eigen::Vector3d& raw);
  friend class StrategyProfile;

  Eigen::Vector3d v_;
};

// Accepts `raw` if every component lies in [0, 1] and the components sum to
// 1 within kSimplexTolerance. Throws ValidationError naming the violated
// invariant otherwise.
Strategy validate(const Eigen::Vector3d& raw);
inline Strategy validate(double x, double y, double z) {
  return validate(Eigen::Vector3d(x, y, z));
}

// Clamps tiny negatives to zero and rescales to unit sum. Components below
// -kSimplexTolerance, non-finite input, or zero total mass throw DomainError.
Strategy renormalize(const Eigen::Vector3d& raw);
inline Strategy renormalize(double x, double y, double z) {
  return renormalize(Eigen::Vector3d(x, y, z));
}

// One strategy per node for a fixed information type and time step, stored
// as an N x 3 matrix (row j = player j).
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::span<const Strategy> strategies);
  // n copies of s.
  StrategyProfile(std::size_t n, const Strategy& s);
  // Validates every row.
  static StrategyProfile from_matrix(const Eigen::MatrixX3d& m);

  std::size_t size() const { return static_cast<std::size_t>(m_.rows()); }
  Strategy operator[](std::size_t j) const;
  const Eigen::MatrixX3d& matrix() const { return m_; }

  // Column means (the population mean strategy).
  Eigen::Vector3d mean() const { return m_.colwise().mean().transpose(); }

  friend bool operator==(const StrategyProfile& a, const StrategyProfile& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  explicit StrategyProfile(Eigen::MatrixX3d m) : m_(std::move(m)) {}
  Eigen::MatrixX3d m_;
};

}  // namespace infoshare

#endif  // INFOSHARE_STRATEGY_HPP_
