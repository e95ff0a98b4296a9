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

#include "infoshare/best_response.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infoshare/errors.hpp"

namespace infoshare {

std::string_view to_string(TieBreak tie) {
  switch (tie) {
    case TieBreak::kReleaseFirst: return "release-first";
    case TieBreak::kWithholdFirst: return "withhold-first";
    case TieBreak::kLieFirst: return "lie-first";
  }
  return "release-first";
}

TieBreak parse_tie_break(std::string_view name) {
  if (name == "release-first") return TieBreak::kReleaseFirst;
  if (name == "withhold-first") return TieBreak::kWithholdFirst;
  if (name == "lie-first") return TieBreak::kLieFirst;
  throw ValidationError("tie_break must be release-first, withhold-first or "
                        "lie-first, got '" + std::string(name) + "'");
}

bool precedes(const Strategy& a, const Strategy& b, TieBreak tie) {
  int first = 0;
  int second = 1;
  switch (tie) {
    case TieBreak::kReleaseFirst: first = 0; second = 1; break;
    case TieBreak::kWithholdFirst: first = 1; second = 0; break;
    case TieBreak::kLieFirst: first = 2; second = 0; break;
  }
  const auto& va = a.vector();
  const auto& vb = b.vector();
  if (va[first] != vb[first]) return va[first] > vb[first];
  return va[second] > vb[second];
}

bool payoff_tie(double a, double b) { return std::abs(a - b) <= kPayoffTieTolerance; }

namespace {

// Maximum value first, then the most preferred point among near-maximal ones.
BestResponse select(const std::vector<Strategy>& points,
                    const std::vector<double>& values, TieBreak tie) {
  const double top = *std::max_element(values.begin(), values.end());
  std::size_t pick = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!payoff_tie(values[i], top)) continue;
    if (pick == points.size() || precedes(points[i], points[pick], tie)) pick = i;
  }
  return {points[pick], values[pick]};
}

}  // namespace

namespace {

// Rounding slack within which a point counts as lying on a threshold.
constexpr double kSnap = 1e-12;

// Removes `amount` from release first, then from lie.
void take_disclosure(Eigen::Vector3d& v, double amount) {
  const double from_x = std::min(v.x(), amount);
  v.x() -= from_x;
  v.z() = std::max(0.0, v.z() - (amount - from_x));
}

// Moves a point that sits on the alpha or beta threshold up to rounding
// onto the side where the multiplier is 1. Both moves shift mass into
// withholding, which never lowers either indicator.
Eigen::Vector3d settle_on_thresholds(Eigen::Vector3d v,
                                     const Eigen::Vector3d& avg) {
  if (v.y() < avg.y() && avg.y() - v.y() <= kSnap) {
    take_disclosure(v, avg.y() - v.y());
    v.y() = avg.y();
  }
  const double cap = avg.x() + avg.z();
  for (int i = 0; i < 8 && v.x() + v.z() > cap && v.x() + v.z() - cap <= kSnap; ++i) {
    const double excess = v.x() + v.z() - cap;
    take_disclosure(v, excess);
    v.y() += excess;
    if (v.x() + v.z() > cap) {
      if (v.x() > 0.0) {
        v.x() = std::nextafter(v.x(), 0.0);
      } else {
        v.z() = std::nextafter(v.z(), 0.0);
      }
    }
  }
  return v;
}

}  // namespace

std::vector<Strategy> candidate_set(const Eigen::Vector3d& neighbor_avg) {
  const double xbar = neighbor_avg.x();
  const double ybar = neighbor_avg.y();
  const double zbar = neighbor_avg.z();

  // Disclosed mass s = x + z at every vertical cell edge.
  const std::vector<double> s_levels{0.0, 1.0, std::clamp(xbar + zbar, 0.0, 1.0),
                                     std::clamp(1.0 - ybar, 0.0, 1.0)};
  std::vector<double> z_levels{0.0, std::clamp(zbar, 0.0, 1.0)};
  // The cell z < zbar is open; its supremum is approached one ulp below.
  if (zbar > 0.0) z_levels.push_back(std::nextafter(std::min(1.0, zbar), 0.0));

  std::vector<Eigen::Vector3d> points;
  for (double s : s_levels) {
    points.emplace_back(0.0, 1.0 - s, s);  // all disclosure is lies
    for (double z : z_levels) {
      if (z <= s) points.emplace_back(std::max(0.0, s - z), 1.0 - s, z);
    }
  }
  for (double z : z_levels) points.emplace_back(0.0, 1.0 - z, z);

  std::vector<Strategy> out;
  for (const auto& p : points) {
    const Strategy c = validate(settle_on_thresholds(p, neighbor_avg));
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const Strategy& o) {
      return o == c;
    });
    if (!duplicate) out.push_back(c);
  }
  return out;
}

BestResponse best_response(const Eigen::Vector3d& neighbor_avg,
                           const PlayerParams& params, double tau,
                           TieBreak tie) {
  const std::vector<Strategy> points = candidate_set(neighbor_avg);
  std::vector<double> values;
  values.reserve(points.size());
  for (const Strategy& c : points) {
    values.push_back(stage_expected_payoff(c, neighbor_avg, params, tau).total);
  }
  return select(points, values, tie);
}

BestResponse grid_oracle(const Eigen::Vector3d& neighbor_avg,
                         const PlayerParams& params, double tau, int n,
                         TieBreak tie) {
  if (n < 2) throw DomainError("grid_oracle resolution must be at least 2");
  std::vector<Strategy> points;
  std::vector<double> values;
  const auto count = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
  points.reserve(count);
  values.reserve(count);
  const double step = 1.0 / n;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      points.push_back(validate(i * step, j * step, (n - i - j) * step));
      values.push_back(stage_expected_payoff(points.back(), neighbor_avg, params, tau).total);
    }
  }
  return select(points, values, tie);
}

}  // namespace infoshare
