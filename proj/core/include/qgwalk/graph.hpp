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

#pragma once

// Graph combinatorics underlying every coined walk: the base graph, its
// symmetric arc space D(G), the line digraph, and the partitions of the line
// digraph into disjoint essential cycles (equivalently, one bijection between
// in- and out-arcs per vertex).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qgwalk {

/// Vertex label, 1-based.
using Vertex = int;

struct Arc {
  Vertex origin = 0;
  Vertex terminus = 0;

  Arc reversed() const noexcept { return {terminus, origin}; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Edge {
  Vertex lo = 0;  ///< smaller label
  Vertex hi = 0;  ///< larger label
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple connected undirected graph on vertices 1..vertex_count.
class Graph {
 public:
  /// Throws ValidationError for self-loops, repeated edges, labels out of
  /// range, or a disconnected vertex set.
  Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Edges normalized to (lo, hi) and sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Neighbors of v in ascending label order.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;
  /// Position of {u,v} in edges(); throws ValidationError if absent.
  std::size_t edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Small named graphs used throughout tests, benchmarks and the CLI examples.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // center is vertex 1
Graph complete_graph(int n);

/// Canonical realization of D(G): arcs sorted lexicographically by
/// (origin, terminus), so arcs leaving a vertex are contiguous and ordered
/// like neighbors(origin). Cheap to copy; the tables are shared.
class ArcSpace {
 public:
  explicit ArcSpace(Graph graph);

  const Graph& graph() const noexcept { return data_->graph; }
  std::size_t size() const noexcept { return data_->arcs.size(); }
  const std::vector<Arc>& arcs() const noexcept { return data_->arcs; }
  const Arc& arc(std::size_t index) const { return data_->arcs.at(index); }
  bool contains(Arc a) const noexcept;
  /// Throws ValidationError for an arc not in D(G).
  std::size_t index_of(Arc a) const;
  std::size_t reverse_index(std::size_t index) const { return data_->reverse.at(index); }
  /// Ordered basis of H_v: the termini of the arcs leaving v.
  const std::vector<Vertex>& neighbor_order(Vertex v) const { return graph().neighbors(v); }
  /// Index of the first arc with origin v; arcs [offset, offset + d_v) leave v.
  std::size_t block_offset(Vertex v) const { return data_->offsets.at(static_cast<std::size_t>(v - 1)); }
  /// Position of a.terminus inside neighbor_order(a.origin).
  int local_index(Arc a) const;

  friend bool operator==(const ArcSpace& a, const ArcSpace& b) {
    return a.data_ == b.data_ || a.graph() == b.graph();
  }

 private:
  struct Data {
    Graph graph;
    std::vector<Arc> arcs;
    std::vector<std::size_t> reverse;
    std::vector<std::size_t> offsets;
  };
  std::shared_ptr<const Data> data_;
};

ArcSpace build_arc_space(const Graph& g);

struct LineDigraph {
  std::vector<Arc> vertices;                 ///< D(G), in ArcSpace order
  std::vector<std::pair<Arc, Arc>> arcs;     ///< ((u,v),(v,w)) for all w in N(v)
};

LineDigraph line_digraph(const Graph& g);

/// A decomposition of the line digraph into disjoint essential cycles, stored
/// both as cycles and as the flat successor map f_pi. Construction validates
/// that the two agree.
class Partition {
 public:
  /// successor[i] is f_pi(arc(i)). Throws ValidationError unless, at every
  /// vertex j, i -> f(i,j) is a bijection of N(j).
  static Partition from_successors(ArcSpace arcs, std::vector<Vertex> successor);
  /// Throws ValidationError unless the cycles are essential line-digraph
  /// cycles that are disjoint and cover D(G).
  static Partition from_cycles(ArcSpace arcs, const std::vector<std::vector<Arc>>& cycles);

  const ArcSpace& arc_space() const noexcept { return arcs_; }
  /// f_pi(i,j); throws ValidationError for an arc outside D(G).
  Vertex successor(Arc a) const;
  Vertex successor_at(std::size_t index) const { return successor_.at(index); }
  /// Index of (j, f_pi(i,j)) given the index of (i,j).
  std::size_t next_index(std::size_t index) const { return next_.at(index); }
  const std::vector<Vertex>& successors() const noexcept { return successor_; }
  /// Cycles in canonical form: each starts at its smallest arc, ordered by
  /// that arc.
  const std::vector<std::vector<Arc>>& cycles() const noexcept { return cycles_; }
  bool is_flip_flop() const noexcept;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.arcs_ == b.arcs_ && a.successor_ == b.successor_;
  }

 private:
  Partition(ArcSpace arcs, std::vector<Vertex> successor);

  ArcSpace arcs_;
  std::vector<Vertex> successor_;
  std::vector<std::size_t> next_;
  std::vector<std::vector<Arc>> cycles_;
};

/// Re-checks every Partition invariant from scratch (disjointness, coverage,
/// essentiality, per-vertex bijectivity, cycle/map consistency). Returns an
/// empty string on success, otherwise a description of the first violation.
std::string validate_partition(const Partition& p);

Partition flip_flop_partition(const ArcSpace& arcs);
inline Partition flip_flop_partition(const Graph& g) { return flip_flop_partition(ArcSpace(g)); }

inline constexpr std::uint64_t kDefaultPartitionCap = 1'000'000;

/// prod_u d_u!, saturating at UINT64_MAX.
std::uint64_t partition_count(const Graph& g);

/// All prod_u d_u! partitions, as the product of the per-vertex bijections in
/// lexicographic order. Throws CapExceededError past the cap.
std::vector<Partition> enumerate_partitions(const ArcSpace& arcs,
                                            std::uint64_t cap = kDefaultPartitionCap);

/// Independent uniform bijection at each vertex; exact uniform sampling of Pi_G.
Partition random_partition(const ArcSpace& arcs, std::mt19937_64& rng);

inline Vertex successor(const Partition& p, Arc a) { return p.successor(a); }

/// The partition made of reversed cycles: every arc and the traversal order
/// are flipped, so its successor map is g(j,i) with
/// ((j,i),(i,g(j,i))) on a reversed cycle and S_pi^{-1}|i,j> = |g(j,i), i>.
/// An involution; g(j,i) = j for all arcs iff p is the flip-flop partition.
Partition reverse_partition(const Partition& p);

/// Bijection on N(vertex) sending f_p(i,vertex) to f_q(i,vertex).
struct PermutationTable {
  Vertex vertex = 0;
  /// mapping[k] is the image of neighbor_order(vertex)[k], as a local index.
  std::vector<int> mapping;

  bool is_identity() const noexcept;
};

PermutationTable partition_permutation(const Partition& p, const Partition& q, Vertex j);

}  // namespace qgwalk
