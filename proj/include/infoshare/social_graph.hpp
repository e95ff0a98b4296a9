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

#ifndef INFOSHARE_SOCIAL_GRAPH_HPP_
#define INFOSHARE_SOCIAL_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace infoshare {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;

// Static undirected user graph with optional per-node popularity weights.
//
// Neighborhoods exclude the node itself. The graph precomputes a
// row-stochastic averaging operator A with A(j,k) = p_k / sum_{l in N(j)} p_l
// for k in N(j) (p = 1 without popularity), so that the neighbor averages of
// a whole profile are the single product A * profile.
class SocialGraph {
 public:
  // Throws ValidationError on self-loops, out-of-range endpoints, a zero node
  // count, or a popularity vector that is not strictly positive and of size
  // node_count. Duplicate edges (in either orientation) are merged.
  SocialGraph(std::size_t node_count, std::span<const Edge> edges,
              std::optional<std::vector<double>> popularity = std::nullopt);

  std::size_t node_count() const { return adjacency_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<std::vector<double>>& popularity() const {
    return popularity_;
  }
  bool has_popularity() const { return popularity_.has_value(); }

  // Sorted neighbor ids of j. Throws DomainError if j >= node_count().
  const std::vector<NodeId>& neighborhood(NodeId j) const;

  // Nodes with an empty neighborhood.
  std::vector<NodeId> isolated_nodes() const;

  // Row-stochastic averaging operator; rows of isolated nodes are empty.
  const Eigen::SparseMatrix<double, Eigen::RowMajor>& averaging_operator()
      const {
    return averaging_;
  }

  friend bool operator==(const SocialGraph& a, const SocialGraph& b) {
    return a.node_count() == b.node_count() && a.edges_ == b.edges_ &&
           a.popularity_ == b.popularity_;
  }

  // Copy of this graph with every popularity weight set to `weight`.
  SocialGraph with_uniform_popularity(double weight) const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Edge> edges_;
  std::optional<std::vector<double>> popularity_;
  Eigen::SparseMatrix<double, Eigen::RowMajor> averaging_;
};

// Complete graph on n nodes.
SocialGraph complete_graph(std::size_t n);

// Mean of `values` over N(j), popularity-weighted if the graph carries
// weights. `values` is indexed by node id and must cover every neighbor.
// Throws DomainError for an unknown node or an empty neighborhood.
double neighbor_average(const SocialGraph& graph, NodeId j,
                        const Eigen::Ref<const Eigen::VectorXd>& values);

// Sparse variant: only neighbors of j need entries. Throws DomainError if a
// neighbor is missing from the map.
double neighbor_average(const SocialGraph& graph, NodeId j,
                        const std::unordered_map<NodeId, double>& values);

// Neighbor averages for all nodes at once: row j is the (weighted) mean of
// the rows of `profile` over N(j). Throws DomainError on isolated nodes.
Eigen::MatrixX3d neighbor_averages(const SocialGraph& graph,
                                   const Eigen::MatrixX3d& profile);

}  // namespace infoshare

#endif  // INFOSHARE_SOCIAL_GRAPH_HPP_
