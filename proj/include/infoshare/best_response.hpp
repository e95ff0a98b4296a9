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

#ifndef INFOSHARE_BEST_RESPONSE_HPP_
#define INFOSHARE_BEST_RESPONSE_HPP_

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "infoshare/payoff.hpp"
#include "infoshare/strategy.hpp"

namespace infoshare {

// Preference among strategies of equal stage payoff.
enum class TieBreak {
  kReleaseFirst,   // larger x, then larger y (default)
  kWithholdFirst,  // larger y, then larger x
  kLieFirst,       // larger z, then larger x
};

std::string_view to_string(TieBreak tie);
// Accepts "release-first", "withhold-first", "lie-first".
TieBreak parse_tie_break(std::string_view name);

// True if `a` is preferred to `b` under `tie` (strict).
bool precedes(const Strategy& a, const Strategy& b, TieBreak tie);

// Payoffs closer than this are treated as equal and resolved by TieBreak.
inline constexpr double kPayoffTieTolerance = 1e-13;

// True if payoffs a and b are equal up to rounding.
bool payoff_tie(double a, double b);

struct BestResponse {
  Strategy strategy;
  double value = 0.0;
};

// Finite set of simplex points containing a maximizer of the stage payoff
// for every parameter choice. In (s, z) = (x + z, z) coordinates the simplex
// is the triangle 0 <= z <= s <= 1, and the multipliers are constant on the
// cells cut by s = xbar + zbar, s = 1 - ybar and z = zbar. The payoff is
// linear on each cell, so cell vertices suffice. The cell z < zbar is open
// and its supremum is not attained; it is represented by points one ulp below
// zbar. Exact duplicates are removed.
std::vector<Strategy> candidate_set(const Eigen::Vector3d& neighbor_avg);

// One-stage best response with others' strategies and tau held fixed.
BestResponse best_response(const Eigen::Vector3d& neighbor_avg,
                           const PlayerParams& params, double tau,
                           TieBreak tie = TieBreak::kReleaseFirst);

// Exhaustive search over the lattice {(i, j, n - i - j) / n}. Test oracle for
// best_response; O(n^2) per call. Requires n >= 2.
BestResponse grid_oracle(const Eigen::Vector3d& neighbor_avg,
                         const PlayerParams& params, double tau, int n,
                         TieBreak tie = TieBreak::kReleaseFirst);

}  // namespace infoshare

#endif  // INFOSHARE_BEST_RESPONSE_HPP_
