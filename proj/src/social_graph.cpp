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

#include "infoshare/social_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infoshare/errors.hpp"

namespace infoshare {

SocialGraph::SocialGraph(std::size_t node_count, std::span<const Edge> edges,
                         std::optional<std::vector<double>> popularity)
    : adjacency_(node_count), popularity_(std::move(popularity)) {
  if (node_count == 0) throw ValidationError("graph.nodes must be positive");
  for (const auto& [a, b] : edges) {
    if (a >= node_count || b >= node_count) {
      throw ValidationError("graph.edges: endpoint out of range in edge (" +
                            std::to_string(a) + "," + std::to_string(b) +
                            ")");
    }
    if (a == b) {
      throw ValidationError("graph.edges: self-loop at node " +
                            std::to_string(a));
    }
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  if (popularity_) {
    if (popularity_->size() != node_count) {
      throw ValidationError("graph.popularity must give a weight for every node");
    }
    for (std::size_t k = 0; k < node_count; ++k) {
      const double p = (*popularity_)[k];
      if (!std::isfinite(p) || p <= 0.0) {
        throw ValidationError("graph.popularity: weight of node " +
                              std::to_string(k) + " must be positive");
      }
    }
  }

  std::vector<Eigen::Triplet<double>> triplets;
  for (NodeId j = 0; j < node_count; ++j) {
    const auto& nbrs = adjacency_[j];
    double mass = 0.0;
    for (NodeId k : nbrs) mass += popularity_ ? (*popularity_)[k] : 1.0;
    for (NodeId k : nbrs) {
      const double p = popularity_ ? (*popularity_)[k] : 1.0;
      triplets.emplace_back(static_cast<int>(j), static_cast<int>(k), p / mass);
    }
  }
  averaging_.resize(static_cast<Eigen::Index>(node_count),
                    static_cast<Eigen::Index>(node_count));
  averaging_.setFromTriplets(triplets.begin(), triplets.end());
}

const std::vector<NodeId>& SocialGraph::neighborhood(NodeId j) const {
  if (j >= adjacency_.size()) {
    throw DomainError("unknown node id " + std::to_string(j));
  }
  return adjacency_[j];
}

std::vector<NodeId> SocialGraph::isolated_nodes() const {
  std::vector<NodeId> out;
  for (NodeId j = 0; j < adjacency_.size(); ++j) {
    if (adjacency_[j].empty()) out.push_back(j);
  }
  return out;
}

SocialGraph SocialGraph::with_uniform_popularity(double weight) const {
  return SocialGraph(node_count(), edges_,
                     std::vector<double>(node_count(), weight));
}

SocialGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return SocialGraph(n, edges);
}

namespace {

template <typename Lookup>
double weighted_mean(const SocialGraph& graph, NodeId j, Lookup&& value_of) {
  const auto& nbrs = graph.neighborhood(j);
  if (nbrs.empty()) {
    throw DomainError("node " + std::to_string(j) + " has no neighbors");
  }
  double num = 0.0;
  double den = 0.0;
  for (NodeId k : nbrs) {
    const double p = graph.has_popularity() ? (*graph.popularity())[k] : 1.0;
    num += p * value_of(k);
    den += p;
  }
  return num / den;
}

}  // namespace

double neighbor_average(const SocialGraph& graph, NodeId j,
                        const Eigen::Ref<const Eigen::VectorXd>& values) {
  return weighted_mean(graph, j, [&](NodeId k) {
    if (static_cast<Eigen::Index>(k) >= values.size()) {
      throw DomainError("no value for neighbor " + std::to_string(k));
    }
    return values(static_cast<Eigen::Index>(k));
  });
}

double neighbor_average(const SocialGraph& graph, NodeId j,
                        const std::unordered_map<NodeId, double>& values) {
  return weighted_mean(graph, j, [&](NodeId k) {
    auto it = values.find(k);
    if (it == values.end()) {
      throw DomainError("no value for neighbor " + std::to_string(k));
    }
    return it->second;
  });
}

Eigen::MatrixX3d neighbor_averages(const SocialGraph& graph,
                                   const Eigen::MatrixX3d& profile) {
  if (static_cast<std::size_t>(profile.rows()) != graph.node_count()) {
    throw DomainError("profile size does not match graph");
  }
  if (auto isolated = graph.isolated_nodes(); !isolated.empty()) {
    throw DomainError("node " + std::to_string(isolated.front()) +
                      " has no neighbors");
  }
  return graph.averaging_operator() * profile;
}

}  // namespace infoshare
