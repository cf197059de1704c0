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

#include "hypnet/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>

namespace hypnet {

Graph::Graph(std::size_t n) : adjacency_(n) {}

bool Graph::AddEdge(NodeId u, NodeId v) {
  if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
  if (u >= num_nodes() || v >= num_nodes()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++num_edges_;
  return true;
}

bool Graph::RemoveEdge(NodeId u, NodeId v) {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) return false;
  nu.erase(it);
  auto& nv = adjacency_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --num_edges_;
  return true;
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges_);
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

bool DistanceMatrix::AllReachable() const {
  return std::none_of(hops_.begin(), hops_.end(),
                      [](std::int32_t h) { return h == kUnreachable; });
}

DistanceMatrix ShortestPaths(const Graph& g) {
  const std::size_t n = g.num_nodes();
  DistanceMatrix d(n);
  std::vector<NodeId> frontier;
  frontier.reserve(n);
  for (NodeId source = 0; source < n; ++source) {
    frontier.clear();
    frontier.push_back(source);
    d.set(source, source, 0);
    // The frontier vector doubles as the BFS queue.
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const NodeId u = frontier[head];
      const std::int32_t next = d.at(source, u) + 1;
      for (NodeId v : g.Neighbors(u)) {
        if (!d.Reachable(source, v)) {
          d.set(source, v, next);
          frontier.push_back(v);
        }
      }
    }
  }
  return d;
}

Component LargestComponent(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::int64_t> label(n, -1);
  std::vector<std::size_t> sizes;
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    const auto id = static_cast<std::int64_t>(sizes.size());
    std::size_t size = 0;
    stack.push_back(start);
    label[start] = id;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId v : g.Neighbors(u)) {
        if (label[v] < 0) {
          label[v] = id;
          stack.push_back(v);
        }
      }
    }
    sizes.push_back(size);
  }

  Component out;
  if (n == 0) return out;
  // Components are numbered in order of their smallest node id, so the first
  // maximum wins ties.
  const auto best = static_cast<std::int64_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> new_id(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    if (label[u] == best) {
      new_id[u] = static_cast<NodeId>(out.original_id.size());
      out.original_id.push_back(u);
    }
  }
  out.graph = Graph(out.original_id.size());
  for (const auto& [u, v] : g.Edges()) {
    if (label[u] == best) out.graph.AddEdge(new_id[u], new_id[v]);
  }
  return out;
}

double LocalClustering(const Graph& g, NodeId u) {
  const auto& nbrs = g.Neighbors(u);
  const std::size_t k = nbrs.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (g.HasEdge(nbrs[a], nbrs[b])) ++links;
    }
  }
  return 2.0 * static_cast<double>(links) / static_cast<double>(k * (k - 1));
}

double AverageClustering(const Graph& g) {
  if (g.num_nodes() == 0) return 0.0;
  double total = 0.0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) total += LocalClustering(g, u);
  return total / static_cast<double>(g.num_nodes());
}

GraphStats DescriptiveStats(const Graph& g) {
  GraphStats stats;
  stats.degrees.reserve(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) stats.degrees.push_back(g.Degree(u));
  stats.average_clustering = AverageClustering(g);

  const Component lc = LargestComponent(g);
  const std::size_t m = lc.graph.num_nodes();
  if (m >= 2) {
    const DistanceMatrix d = ShortestPaths(lc.graph);
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j) total += d.at(i, j);
      }
    }
    stats.mean_path_length = total / static_cast<double>(m * (m - 1));
  }
  return stats;
}

EdgeListError::EdgeListError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses whitespace-separated unsigned integers; nullopt on any junk.
std::optional<std::vector<std::uint64_t>> ParseIntegers(std::string_view s) {
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  while (true) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos == s.size()) break;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc()) return std::nullopt;
    pos = static_cast<std::size_t>(ptr - s.data());
    if (pos < s.size() && s[pos] != ' ' && s[pos] != '\t') return std::nullopt;
    values.push_back(value);
  }
  return values;
}

constexpr std::string_view kNodesDirective = "nodes";
constexpr std::uint64_t kMaxNodeId = 0xffffffffULL - 1;

}  // namespace

Graph ParseEdgeList(std::istream& in) {
  struct LineEdge {
    std::size_t line;
    NodeId u, v;
  };
  std::vector<LineEdge> edges;
  std::optional<std::uint64_t> declared;
  std::size_t declared_line = 0;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = Trim(raw);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const std::string_view body = Trim(text.substr(1));
      if (body.substr(0, kNodesDirective.size()) == kNodesDirective) {
        const auto values = ParseIntegers(body.substr(kNodesDirective.size()));
        if (!values || values->size() != 1) {
          throw EdgeListError(line, "malformed node-count directive");
        }
        if (declared) throw EdgeListError(line, "repeated node-count directive");
        declared = values->front();
        declared_line = line;
      }
      continue;
    }
    const auto values = ParseIntegers(text);
    if (!values || values->size() != 2) {
      throw EdgeListError(line, "expected two non-negative integers");
    }
    const std::uint64_t u = (*values)[0];
    const std::uint64_t v = (*values)[1];
    if (u > kMaxNodeId || v > kMaxNodeId) throw EdgeListError(line, "node id too large");
    if (u == v) throw EdgeListError(line, "self-loop on node " + std::to_string(u));
    edges.push_back({line, static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }

  std::uint64_t n = 0;
  for (const auto& e : edges) n = std::max<std::uint64_t>(n, std::max(e.u, e.v) + 1ULL);
  if (declared) {
    for (const auto& e : edges) {
      if (e.u >= *declared || e.v >= *declared) {
        throw EdgeListError(e.line, "node id exceeds declared node count " +
                                        std::to_string(*declared) + " (line " +
                                        std::to_string(declared_line) + ")");
      }
    }
    n = *declared;
  }
  Graph g(n);
  for (const auto& e : edges) {
    if (!g.AddEdge(e.u, e.v)) {
      throw EdgeListError(e.line, "duplicate edge " + std::to_string(e.u) + " " +
                                      std::to_string(e.v));
    }
  }
  return g;
}

Graph ReadEdgeList(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return ParseEdgeList(in);
}

void FormatEdgeList(const Graph& g, std::ostream& out) {
  out << "# nodes " << g.num_nodes() << '\n';
  for (const auto& [u, v] : g.Edges()) out << u << ' ' << v << '\n';
}

void WriteEdgeList(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  FormatEdgeList(g, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace hypnet
