// Copyright 2026 The hypnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPNET_GRAPH_H_
#define HYPNET_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypnet {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Simple undirected graph on nodes 0..n-1. Adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  // Returns false if the edge already exists. Self-loops and out-of-range ids
  // throw std::invalid_argument.
  bool AddEdge(NodeId u, NodeId v);
  // Returns false if the edge was absent.
  bool RemoveEdge(NodeId u, NodeId v);
  bool HasEdge(NodeId u, NodeId v) const;

  std::size_t Degree(NodeId u) const { return adjacency_.at(u).size(); }
  const std::vector<NodeId>& Neighbors(NodeId u) const { return adjacency_.at(u); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> Edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t num_edges_ = 0;
};

// Hop counts between all node pairs; unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  explicit DistanceMatrix(std::size_t n)
      : n_(n), hops_(n * n, kUnreachable) {}

  std::size_t size() const { return n_; }
  std::int32_t at(std::size_t i, std::size_t j) const { return hops_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::int32_t hops) { hops_[i * n_ + j] = hops; }
  bool Reachable(std::size_t i, std::size_t j) const { return at(i, j) != kUnreachable; }
  bool AllReachable() const;

 private:
  std::size_t n_;
  std::vector<std::int32_t> hops_;
};

// Breadth-first search from every node.
DistanceMatrix ShortestPaths(const Graph& g);

struct Component {
  Graph graph;
  // original_id[new_id] is the node's id in the input graph.
  std::vector<NodeId> original_id;
};

// Induced subgraph on the largest connected component. Ties go to the
// component containing the smallest node id.
Component LargestComponent(const Graph& g);

struct GraphStats {
  std::vector<std::size_t> degrees;
  double average_clustering = 0.0;
  // Mean hop distance over ordered pairs of the largest component.
  double mean_path_length = 0.0;
};

// Local clustering of a node; nodes of degree < 2 score 0.
double LocalClustering(const Graph& g, NodeId u);
double AverageClustering(const Graph& g);
GraphStats DescriptiveStats(const Graph& g);

// Edge-list text format: one "u v" pair per line, '#' starts a comment line.
// WriteEdgeList emits a leading "# nodes N" comment so that isolated
// trailing nodes survive a round trip; ReadEdgeList honors it when present.
class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Graph ParseEdgeList(std::istream& in);
Graph ReadEdgeList(const std::filesystem::path& path);
void FormatEdgeList(const Graph& g, std::ostream& out);
void WriteEdgeList(const Graph& g, const std::filesystem::path& path);

}  // namespace hypnet

#endif  // HYPNET_GRAPH_H_
