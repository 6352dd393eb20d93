// Copyright 2026 The qgwalk Authors
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

#include "qgwalk/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "qgwalk/error.hpp"

namespace qgwalk {

namespace {

std::string arc_name(Arc a) {
  return "(" + std::to_string(a.origin) + "," + std::to_string(a.terminus) + ")";
}

}  // namespace

Graph::Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

Graph::Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 1) {
    throw ValidationError("graph must have at least one vertex");
  }
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 1 || u > vertex_count || v < 1 || v > vertex_count) {
      throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} references a vertex outside 1.." + std::to_string(vertex_count));
    }
    if (u == v) {
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) {
      throw ValidationError("repeated edge {" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}");
    }
  }
  edges_.assign(seen.begin(), seen.end());

  adjacency_.resize(static_cast<std::size_t>(vertex_count));
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.lo - 1)].push_back(e.hi);
    adjacency_[static_cast<std::size_t>(e.hi - 1)].push_back(e.lo);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  if (vertex_count > 1 && edges_.empty()) {
    throw ValidationError("graph is disconnected (no edges)");
  }
  std::vector<char> visited(static_cast<std::size_t>(vertex_count), 0);
  std::vector<Vertex> stack{1};
  visited[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[static_cast<std::size_t>(u - 1)]) {
      if (!visited[static_cast<std::size_t>(w - 1)]) {
        visited[static_cast<std::size_t>(w - 1)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count) {
    throw ValidationError("graph is disconnected: " + std::to_string(reached) + " of " +
                          std::to_string(vertex_count) + " vertices reachable from vertex 1");
  }
  if (edges_.empty()) {
    throw ValidationError("graph has no edges, so the arc space is empty");
  }
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v < 1 || v > vertex_count_) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[static_cast<std::size_t>(v - 1)];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 1 || u > vertex_count_ || v < 1 || v > vertex_count_) return false;
  const auto& n = adjacency_[static_cast<std::size_t>(u - 1)];
  return std::binary_search(n.begin(), n.end(), v);
}

std::size_t Graph::edge_index(Vertex u, Vertex v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) {
    throw ValidationError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle graph needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n, 1);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 2; i <= leaves + 1; ++i) e.emplace_back(1, i);
  return Graph(leaves + 1, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

// ---------------------------------------------------------------------------
// ArcSpace

ArcSpace::ArcSpace(Graph graph) {
  auto data = std::make_shared<Data>(Data{std::move(graph), {}, {}, {}});
  const Graph& g = data->graph;
  data->offsets.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex u = 1; u <= g.vertex_count(); ++u) {
    data->offsets.push_back(data->arcs.size());
    for (Vertex v : g.neighbors(u)) data->arcs.push_back({u, v});
  }
  const auto& all = data->arcs;
  data->reverse.reserve(all.size());
  for (const Arc& a : all) {
    auto it = std::lower_bound(all.begin(), all.end(), a.reversed());
    data->reverse.push_back(static_cast<std::size_t>(it - all.begin()));
  }
  data_ = std::move(data);
}

bool ArcSpace::contains(Arc a) const noexcept {
  return std::binary_search(data_->arcs.begin(), data_->arcs.end(), a);
}

std::size_t ArcSpace::index_of(Arc a) const {
  auto it = std::lower_bound(data_->arcs.begin(), data_->arcs.end(), a);
  if (it == data_->arcs.end() || *it != a) {
    throw ValidationError("unknown arc " + arc_name(a));
  }
  return static_cast<std::size_t>(it - data_->arcs.begin());
}

int ArcSpace::local_index(Arc a) const {
  return static_cast<int>(index_of(a) - block_offset(a.origin));
}

ArcSpace build_arc_space(const Graph& g) { return ArcSpace(g); }

LineDigraph line_digraph(const Graph& g) {
  ArcSpace arcs(g);
  LineDigraph ld;
  ld.vertices = arcs.arcs();
  for (const Arc& a : arcs.arcs()) {
    for (Vertex w : g.neighbors(a.terminus)) ld.arcs.push_back({a, Arc{a.terminus, w}});
  }
  return ld;
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(ArcSpace arcs, std::vector<Vertex> successor)
    : arcs_(std::move(arcs)), successor_(std::move(successor)) {
  const std::size_t n = arcs_.size();
  if (successor_.size() != n) {
    throw ValidationError("successor map has " + std::to_string(successor_.size()) +
                          " entries, expected " + std::to_string(n));
  }
  const Graph& g = arcs_.graph();
  // Bijectivity of i -> f(i,j) on N(j), checked vertex by vertex.
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    const auto& nbrs = g.neighbors(j);
    std::vector<char> hit(nbrs.size(), 0);
    for (Vertex i : nbrs) {
      Vertex f = successor_[arcs_.index_of({i, j})];
      if (!g.adjacent(j, f)) {
        throw ValidationError("successor of " + arc_name({i, j}) + " is " + std::to_string(f) +
                              ", not a neighbor of " + std::to_string(j));
      }
      auto k = static_cast<std::size_t>(arcs_.local_index({j, f}));
      if (hit[k]) {
        throw ValidationError("successor map is not a bijection on N(" + std::to_string(j) +
                              "): " + std::to_string(f) + " used twice");
      }
      hit[k] = 1;
    }
  }
  next_.resize(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const Arc& a = arcs_.arc(idx);
    next_[idx] = arcs_.index_of({a.terminus, successor_[idx]});
  }
  std::vector<char> seen(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Arc> cycle;
    for (std::size_t idx = start; !seen[idx]; idx = next_[idx]) {
      seen[idx] = 1;
      cycle.push_back(arcs_.arc(idx));
    }
    cycles_.push_back(std::move(cycle));
  }
}

Partition Partition::from_successors(ArcSpace arcs, std::vector<Vertex> successor) {
  return Partition(std::move(arcs), std::move(successor));
}

Partition Partition::from_cycles(ArcSpace arcs, const std::vector<std::vector<Arc>>& cycles) {
  const std::size_t n = arcs.size();
  std::vector<Vertex> successor(n, 0);
  std::vector<char> covered(n, 0);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) throw ValidationError("empty cycle in partition");
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const Arc& a = cycle[t];
      const Arc& b = cycle[(t + 1) % cycle.size()];
      std::size_t idx = arcs.index_of(a);
      arcs.index_of(b);
      if (a.terminus != b.origin) {
        throw ValidationError("cycle step " + arc_name(a) + " -> " + arc_name(b) +
                              " is not an arc of the line digraph");
      }
      if (covered[idx]) {
        throw ValidationError("arc " + arc_name(a) + " appears twice across cycles");
      }
      covered[idx] = 1;
      successor[idx] = b.terminus;
    }
  }
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (!covered[idx]) {
      throw ValidationError("arc " + arc_name(arcs.arc(idx)) + " is not covered by any cycle");
    }
  }
  return Partition(std::move(arcs), std::move(successor));
}

Vertex Partition::successor(Arc a) const { return successor_[arcs_.index_of(a)]; }

bool Partition::is_flip_flop() const noexcept {
  for (std::size_t idx = 0; idx < successor_.size(); ++idx) {
    if (successor_[idx] != arcs_.arc(idx).origin) return false;
  }
  return true;
}

std::string validate_partition(const Partition& p) {
  const ArcSpace& arcs = p.arc_space();
  const Graph& g = arcs.graph();
  std::vector<int> owner(arcs.size(), -1);
  for (std::size_t c = 0; c < p.cycles().size(); ++c) {
    const auto& cycle = p.cycles()[c];
    std::set<Arc> within;
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const Arc& a = cycle[t];
      const Arc& b = cycle[(t + 1) % cycle.size()];
      if (!arcs.contains(a)) return "arc " + arc_name(a) + " not in D(G)";
      if (a.terminus != b.origin) return "cycle step " + arc_name(a) + " -> " + arc_name(b) + " not composable";
      if (!within.insert(a).second) return "cycle " + std::to_string(c) + " is not essential";
      std::size_t idx = arcs.index_of(a);
      if (owner[idx] != -1) return "arc " + arc_name(a) + " lies on two cycles";
      owner[idx] = static_cast<int>(c);
      if (p.successor(a) != b.terminus) return "successor map disagrees with cycles at " + arc_name(a);
    }
  }
  for (std::size_t idx = 0; idx < arcs.size(); ++idx) {
    if (owner[idx] == -1) return "arc " + arc_name(arcs.arc(idx)) + " not covered";
  }
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    std::set<Vertex> image;
    for (Vertex i : g.neighbors(j)) image.insert(p.successor({i, j}));
    std::set<Vertex> nbrs(g.neighbors(j).begin(), g.neighbors(j).end());
    if (image != nbrs) return "f_pi(., " + std::to_string(j) + ") is not a bijection of N(j)";
  }
  return {};
}

Partition flip_flop_partition(const ArcSpace& arcs) {
  std::vector<Vertex> successor(arcs.size());
  for (std::size_t idx = 0; idx < arcs.size(); ++idx) successor[idx] = arcs.arc(idx).origin;
  return Partition::from_successors(arcs, std::move(successor));
}

std::uint64_t partition_count(const Graph& g) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (Vertex u = 1; u <= g.vertex_count(); ++u) {
    for (int k = 2; k <= g.degree(u); ++k) {
      if (total > kMax / static_cast<std::uint64_t>(k)) return kMax;
      total *= static_cast<std::uint64_t>(k);
    }
  }
  return total;
}

std::vector<Partition> enumerate_partitions(const ArcSpace& arcs, std::uint64_t cap) {
  const Graph& g = arcs.graph();
  const std::uint64_t count = partition_count(g);
  if (count > cap) throw CapExceededError(count, cap);

  // perms[j-1] is the current bijection at vertex j: in-neighbor N(j)[k] goes
  // to out-neighbor N(j)[perms[j-1][k]]. Odometer over vertices, last fastest.
  const int nv = g.vertex_count();
  std::vector<std::vector<int>> perms(static_cast<std::size_t>(nv));
  for (Vertex j = 1; j <= nv; ++j) {
    auto& p = perms[static_cast<std::size_t>(j - 1)];
    p.resize(static_cast<std::size_t>(g.degree(j)));
    std::iota(p.begin(), p.end(), 0);
  }

  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Vertex> successor(arcs.size());
  while (true) {
    for (Vertex j = 1; j <= nv; ++j) {
      const auto& nbrs = g.neighbors(j);
      const auto& p = perms[static_cast<std::size_t>(j - 1)];
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        successor[arcs.index_of({nbrs[k], j})] = nbrs[static_cast<std::size_t>(p[k])];
      }
    }
    out.push_back(Partition::from_successors(arcs, successor));

    int j = nv;
    while (j >= 1) {
      auto& p = perms[static_cast<std::size_t>(j - 1)];
      if (std::next_permutation(p.begin(), p.end())) break;
      --j;  // next_permutation already reset p to the identity
    }
    if (j < 1) break;
  }
  return out;
}

Partition random_partition(const ArcSpace& arcs, std::mt19937_64& rng) {
  const Graph& g = arcs.graph();
  std::vector<Vertex> successor(arcs.size());
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    std::vector<Vertex> image = g.neighbors(j);
    // Fisher-Yates with an explicit draw so the sequence is portable.
    for (std::size_t k = image.size(); k > 1; --k) {
      std::uniform_int_distribution<std::size_t> pick(0, k - 1);
      std::swap(image[k - 1], image[pick(rng)]);
    }
    const auto& nbrs = g.neighbors(j);
    for (std::size_t k = 0; k < nbrs.size(); ++k) successor[arcs.index_of({nbrs[k], j})] = image[k];
  }
  return Partition::from_successors(arcs, std::move(successor));
}

Partition reverse_partition(const Partition& p) {
  const ArcSpace& arcs = p.arc_space();
  std::vector<Vertex> successor(arcs.size());
  // (x,i) -> (i,j) on p becomes (j,i) -> (i,x) on the reversed cycle.
  for (std::size_t idx = 0; idx < arcs.size(); ++idx) {
    const Arc& a = arcs.arc(idx);
    Vertex j = p.successor_at(idx);
    successor[arcs.index_of({j, a.terminus})] = a.origin;
  }
  return Partition::from_successors(arcs, std::move(successor));
}

bool PermutationTable::is_identity() const noexcept {
  for (std::size_t k = 0; k < mapping.size(); ++k) {
    if (mapping[k] != static_cast<int>(k)) return false;
  }
  return true;
}

PermutationTable partition_permutation(const Partition& p, const Partition& q, Vertex j) {
  if (!(p.arc_space() == q.arc_space())) {
    throw ValidationError("partitions belong to different graphs");
  }
  const ArcSpace& arcs = p.arc_space();
  PermutationTable table{j, std::vector<int>(static_cast<std::size_t>(arcs.graph().degree(j)), -1)};
  for (Vertex i : arcs.graph().neighbors(j)) {
    int from = arcs.local_index({j, p.successor({i, j})});
    int to = arcs.local_index({j, q.successor({i, j})});
    table.mapping[static_cast<std::size_t>(from)] = to;
  }
  return table;
}

}  // namespace qgwalk
