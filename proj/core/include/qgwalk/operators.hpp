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

// Dense operators on l^2(D(G)) (shift, coin, G-type and A-type evolutions)
// and residual checks for the operator identities relating them.

#include <string>

#include "qgwalk/coin_set.hpp"
#include "qgwalk/graph.hpp"
#include "qgwalk/linalg.hpp"

namespace qgwalk {

enum class WalkKind { G, A };

inline WalkKind opposite(WalkKind k) { return k == WalkKind::G ? WalkKind::A : WalkKind::G; }
inline const char* to_string(WalkKind k) { return k == WalkKind::G ? "G" : "A"; }

/// S_pi |i,j> = |j, f_pi(i,j)>: column index_of(i,j) has its single 1 at row
/// index_of(j, f_pi(i,j)).
ComplexMatrix shift_operator(const Partition& p);

/// C = sum_j (+) H_j, block diagonal in the grouping of arcs by origin.
ComplexMatrix coin_operator(const ArcSpace& arcs, const CoinSet& coins);

/// Adjacency matrix of the line digraph: <l,m|M|i,j> = delta_{j,l}.
RealMatrix line_digraph_adjacency(const ArcSpace& arcs);

struct EvolutionOperator {
  ComplexMatrix matrix;
  WalkKind kind;
  Partition partition;
  CoinSet coins;

  const ArcSpace& arc_space() const noexcept { return partition.arc_space(); }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(matrix.rows()); }
};

/// U^(G) = C S_pi, U^(A) = S_pi C. Throws ValidationError if the coins do not
/// match the partition's graph.
EvolutionOperator evolution(WalkKind kind, const Partition& p, const CoinSet& coins);

/// H_j P^(j)_{p,q} at every vertex, where P^(j)_{p,q} is the permutation
/// matrix of partition_permutation(p, q, j).
CoinSet permuted_coins(const CoinSet& coins, const Partition& p, const Partition& q);

/// Matrix of a PermutationTable on H_j: sum_k |e_{mapping[k]}><e_k|.
ComplexMatrix permutation_matrix(const PermutationTable& table);

/// ||(U^(G))^n - S^dagger (U^(A))^n S||.
double verify_dual(const Partition& p, const CoinSet& coins, int n);

struct InverseReport {
  double residual = 0.0;  ///< max_J ||(U^(J)_ff[H])^{-1} - U^(!J)_ff[H^{-1}]||
  bool self_adjoint_case = false;
  /// When every H_j is self-adjoint: max_J ||(U^(J)_ff)^{-1} - U^(!J)_ff||.
  double self_adjoint_residual = 0.0;
};
InverseReport verify_inverse(const ArcSpace& arcs, const CoinSet& coins);

/// ||U^(G)_{q}[H] - U^(G)_{p}[H P_{p,q}]||.
double verify_change_partition(const Partition& p, const Partition& q, const CoinSet& coins);

/// ||U^(G)_p[H] - (U^(A)_ff[Ht^dagger])^dagger||, Ht_j = H_j P^(j)_{ff,p}.
double verify_flip_flop_conversion(const Partition& p, const CoinSet& coins);

/// ||U^(A)_p[H] - S_p (U^(A)_ff[Ht^dagger])^dagger S_p^dagger||.
double verify_a_to_a(const Partition& p, const CoinSet& coins);

struct SeveriniReport {
  bool g_type_supported = false;   ///< supp U^(G) within supp M(LG)
  bool a_type_supported = false;   ///< supp (S^dagger U^(A) S)^dagger within supp M(LG)^T
  std::size_t g_violations = 0;
  std::size_t a_violations = 0;
  bool passed() const noexcept { return g_type_supported && a_type_supported; }
};
/// Entries with magnitude above zero_tol count as support.
SeveriniReport verify_severini(const Partition& p, const CoinSet& coins, double zero_tol = 1e-14);

/// Reads arc (i,j) -> (l,m) entries of U straight from the coin matrices and
/// the successor map (the closed-form matrix elements), for checking
/// evolution() against.
Complex matrix_element(WalkKind kind, const Partition& p, const CoinSet& coins, Arc from, Arc to);

}  // namespace qgwalk
