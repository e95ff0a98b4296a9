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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "infoshare/errors.hpp"
#include "infoshare/social_graph.hpp"
#include "test_support.hpp"

using namespace infoshare;

namespace {

SocialGraph path3() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  return SocialGraph(3, edges);
}

SocialGraph random_graph(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> edges;
  // Spanning path keeps every node connected.
  for (NodeId k = 0; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (testing::uniform(rng) < 0.3) edges.emplace_back(a, b);
    }
  }
  return SocialGraph(n, edges);
}

}  // namespace

TEST_CASE("neighborhood excludes the node itself") {
  CHECK(complete_graph(3).neighborhood(0) == std::vector<NodeId>{1, 2});
  CHECK(path3().neighborhood(1) == std::vector<NodeId>{0, 2});
  CHECK(path3().neighborhood(0) == std::vector<NodeId>{1});
  CHECK_THROWS_AS(path3().neighborhood(3), DomainError);
}

TEST_CASE("graph construction rejects malformed input") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(SocialGraph(3, loop), ValidationError);
  const std::vector<Edge> out_of_range{{0, 5}};
  CHECK_THROWS_AS(SocialGraph(3, out_of_range), ValidationError);
  const std::vector<Edge> ok{{0, 1}, {1, 0}, {0, 1}};
  CHECK(SocialGraph(2, ok).edges().size() == 1);
  CHECK_THROWS_AS(SocialGraph(2, ok, std::vector<double>{1.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(SocialGraph(2, ok, std::vector<double>{1.0}), ValidationError);
  CHECK_THROWS_AS(SocialGraph(0, std::vector<Edge>{}), ValidationError);
}

TEST_CASE("neighbor_average matches hand-computed means") {
  const Eigen::VectorXd constant = Eigen::VectorXd::Constant(3, 0.7);
  CHECK(neighbor_average(complete_graph(3), 0, constant) == doctest::Approx(0.7));

  const std::unordered_map<NodeId, double> ends{{0, 0.2}, {2, 0.8}};
  CHECK(neighbor_average(path3(), 1, ends) == doctest::Approx(0.5));

  // (1*0 + 3*1) / (1 + 3)
  const std::vector<Edge> k3{{0, 1}, {0, 2}, {1, 2}};
  const SocialGraph weighted(3, k3, std::vector<double>{1.0, 1.0, 3.0});
  const std::unordered_map<NodeId, double> values{{1, 0.0}, {2, 1.0}};
  CHECK(neighbor_average(weighted, 0, values) == doctest::Approx(0.75));
}

TEST_CASE("neighbor_average errors") {
  const std::vector<Edge> edges{{0, 1}};
  const SocialGraph g(3, edges);  // node 2 isolated
  const Eigen::VectorXd v = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(neighbor_average(g, 2, v), DomainError);
  CHECK_THROWS_AS(neighbor_average(g, 7, v), DomainError);
  const std::unordered_map<NodeId, double> missing{{2, 1.0}};
  CHECK_THROWS_AS(neighbor_average(g, 0, missing), DomainError);
  CHECK_THROWS_AS(neighbor_averages(g, Eigen::MatrixX3d::Zero(3, 3)), DomainError);
  CHECK(g.isolated_nodes() == std::vector<NodeId>{2});
}

TEST_CASE("properties: uniform popularity, bounds, relabeling") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 12;
    const SocialGraph g = random_graph(rng, n);
    const SocialGraph uniform = g.with_uniform_popularity(testing::uniform(rng, 0.1, 10.0));
    Eigen::VectorXd values(static_cast<Eigen::Index>(n));
    for (auto& v : values) v = testing::uniform(rng);

    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabeled;
    for (const auto& [a, b] : g.edges()) relabeled.emplace_back(perm[a], perm[b]);
    const SocialGraph h(n, relabeled);
    Eigen::VectorXd permuted(static_cast<Eigen::Index>(n));
    for (NodeId k = 0; k < n; ++k) {
      permuted[static_cast<Eigen::Index>(perm[k])] = values[static_cast<Eigen::Index>(k)];
    }

    for (NodeId j = 0; j < n; ++j) {
      const double plain = neighbor_average(g, j, values);
      CHECK(std::abs(neighbor_average(uniform, j, values) - plain) <= 1e-12);
      CHECK(std::abs(neighbor_average(h, perm[j], permuted) - plain) <= 1e-12);
      double lo = 1.0, hi = 0.0;
      for (NodeId k : g.neighborhood(j)) {
        lo = std::min(lo, values[static_cast<Eigen::Index>(k)]);
        hi = std::max(hi, values[static_cast<Eigen::Index>(k)]);
      }
      CHECK(plain >= lo - 1e-15);
      CHECK(plain <= hi + 1e-15);
    }
  }
}

TEST_CASE("neighbor_averages agrees with per-node averages") {
  std::mt19937_64 rng(11);
  const SocialGraph g = random_graph(rng, 8);
  Eigen::MatrixX3d profile(8, 3);
  for (Eigen::Index j = 0; j < 8; ++j) profile.row(j) = testing::random_simplex_point(rng).transpose();
  const Eigen::MatrixX3d avg = neighbor_averages(g, profile);
  for (NodeId j = 0; j < 8; ++j) {
    for (int c = 0; c < 3; ++c) {
      CHECK(avg(static_cast<Eigen::Index>(j), c) ==
            doctest::Approx(neighbor_average(g, j, profile.col(c))).epsilon(1e-14));
    }
  }
}
