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

#include "qgwalk/operators.hpp"

#include <algorithm>
#include <cmath>

#include "qgwalk/error.hpp"

namespace qgwalk {

namespace {

void check_coins_match(const ArcSpace& arcs, const CoinSet& coins) {
  const Graph& g = arcs.graph();
  if (coins.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw ValidationError("coin set size does not match vertex count");
  }
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    if (coins.at(j).rows() != g.degree(j) || coins.at(j).cols() != g.degree(j)) {
      throw ValidationError("coin at vertex " + std::to_string(j) + " does not match its degree");
    }
  }
}

ComplexMatrix build(WalkKind kind, const ComplexMatrix& shift, const ComplexMatrix& coin) {
  return kind == WalkKind::G ? ComplexMatrix(coin * shift) : ComplexMatrix(shift * coin);
}

}  // namespace

ComplexMatrix shift_operator(const Partition& p) {
  const auto n = static_cast<Eigen::Index>(p.arc_space().size());
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    s(static_cast<Eigen::Index>(p.next_index(static_cast<std::size_t>(col))), col) = 1.0;
  }
  return s;
}

ComplexMatrix coin_operator(const ArcSpace& arcs, const CoinSet& coins) {
  check_coins_match(arcs, coins);
  const auto n = static_cast<Eigen::Index>(arcs.size());
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  const Graph& g = arcs.graph();
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    const auto off = static_cast<Eigen::Index>(arcs.block_offset(j));
    const int d = g.degree(j);
    c.block(off, off, d, d) = coins.at(j);
  }
  return c;
}

RealMatrix line_digraph_adjacency(const ArcSpace& arcs) {
  const auto n = static_cast<Eigen::Index>(arcs.size());
  RealMatrix m = RealMatrix::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    const Arc& from = arcs.arc(static_cast<std::size_t>(col));
    for (Vertex w : arcs.graph().neighbors(from.terminus)) {
      m(static_cast<Eigen::Index>(arcs.index_of({from.terminus, w})), col) = 1.0;
    }
  }
  return m;
}

EvolutionOperator evolution(WalkKind kind, const Partition& p, const CoinSet& coins) {
  const ArcSpace& arcs = p.arc_space();
  ComplexMatrix matrix = build(kind, shift_operator(p), coin_operator(arcs, coins));
  return EvolutionOperator{std::move(matrix), kind, p, coins};
}

ComplexMatrix permutation_matrix(const PermutationTable& table) {
  const auto d = static_cast<Eigen::Index>(table.mapping.size());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) m(table.mapping[static_cast<std::size_t>(k)], k) = 1.0;
  return m;
}

CoinSet permuted_coins(const CoinSet& coins, const Partition& p, const Partition& q) {
  const Graph& g = p.arc_space().graph();
  check_coins_match(p.arc_space(), coins);
  std::vector<ComplexMatrix> out;
  out.reserve(coins.size());
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    out.push_back(coins.at(j) * permutation_matrix(partition_permutation(p, q, j)));
  }
  return CoinSet(g, std::move(out), 1e-10);
}

double verify_dual(const Partition& p, const CoinSet& coins, int n) {
  if (n < 0) throw ValidationError("verify_dual: n must be nonnegative");
  const ComplexMatrix s = shift_operator(p);
  const ComplexMatrix c = coin_operator(p.arc_space(), coins);
  const ComplexMatrix lhs = matrix_power(c * s, n);
  const ComplexMatrix rhs = s.adjoint() * matrix_power(s * c, n) * s;
  return operator_norm(lhs - rhs);
}

InverseReport verify_inverse(const ArcSpace& arcs, const CoinSet& coins) {
  const Partition ff = flip_flop_partition(arcs);
  std::vector<ComplexMatrix> inv;
  for (const auto& h : coins.matrices()) inv.push_back(h.inverse());
  const CoinSet inverse_coins(arcs.graph(), std::move(inv), 1e-10);

  InverseReport report;
  for (WalkKind kind : {WalkKind::G, WalkKind::A}) {
    const ComplexMatrix u = evolution(kind, ff, coins).matrix;
    const ComplexMatrix v = evolution(opposite(kind), ff, inverse_coins).matrix;
    report.residual = std::max(report.residual, operator_norm(u.inverse() - v));
  }
  report.self_adjoint_case = coins.self_adjoint();
  if (report.self_adjoint_case) {
    for (WalkKind kind : {WalkKind::G, WalkKind::A}) {
      const ComplexMatrix u = evolution(kind, ff, coins).matrix;
      const ComplexMatrix v = evolution(opposite(kind), ff, coins).matrix;
      report.self_adjoint_residual = std::max(report.self_adjoint_residual, operator_norm(u.inverse() - v));
    }
  }
  return report;
}

double verify_change_partition(const Partition& p, const Partition& q, const CoinSet& coins) {
  const ComplexMatrix lhs = evolution(WalkKind::G, q, coins).matrix;
  const ComplexMatrix rhs = evolution(WalkKind::G, p, permuted_coins(coins, p, q)).matrix;
  return operator_norm(lhs - rhs);
}

double verify_flip_flop_conversion(const Partition& p, const CoinSet& coins) {
  const Partition ff = flip_flop_partition(p.arc_space());
  const CoinSet tilde_adj = permuted_coins(coins, ff, p).adjoint();
  const ComplexMatrix lhs = evolution(WalkKind::G, p, coins).matrix;
  const ComplexMatrix rhs = evolution(WalkKind::A, ff, tilde_adj).matrix.adjoint();
  return operator_norm(lhs - rhs);
}

double verify_a_to_a(const Partition& p, const CoinSet& coins) {
  const Partition ff = flip_flop_partition(p.arc_space());
  const CoinSet tilde_adj = permuted_coins(coins, ff, p).adjoint();
  const ComplexMatrix s = shift_operator(p);
  const ComplexMatrix lhs = evolution(WalkKind::A, p, coins).matrix;
  const ComplexMatrix rhs = s * evolution(WalkKind::A, ff, tilde_adj).matrix.adjoint() * s.adjoint();
  return operator_norm(lhs - rhs);
}

SeveriniReport verify_severini(const Partition& p, const CoinSet& coins, double zero_tol) {
  const ArcSpace& arcs = p.arc_space();
  const RealMatrix m = line_digraph_adjacency(arcs);
  const ComplexMatrix s = shift_operator(p);
  const ComplexMatrix ug = evolution(WalkKind::G, p, coins).matrix;
  // S^dagger U^(A) S is the adjoint of an A-type flip-flop walk, and that walk
  // is supported on the transposed adjacency matrix.
  const ComplexMatrix ua = (s.adjoint() * evolution(WalkKind::A, p, coins).matrix * s).adjoint();

  SeveriniReport report;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(ug(r, c)) > zero_tol && m(r, c) == 0.0) ++report.g_violations;
      if (std::abs(ua(r, c)) > zero_tol && m(c, r) == 0.0) ++report.a_violations;
    }
  }
  report.g_type_supported = report.g_violations == 0;
  report.a_type_supported = report.a_violations == 0;
  return report;
}

Complex matrix_element(WalkKind kind, const Partition& p, const CoinSet& coins, Arc from, Arc to) {
  const ArcSpace& arcs = p.arc_space();
  const Graph& g = arcs.graph();
  const auto [i, j] = from;
  const auto [l, m] = to;
  if (!g.adjacent(i, l)) return 0.0;
  if (kind == WalkKind::G) {
    if (j != l) return 0.0;
    const int row = arcs.local_index({j, m});
    const int col = arcs.local_index({j, p.successor({i, j})});
    return coins.at(j)(row, col);
  }
  if (m != p.successor({i, l})) return 0.0;
  return coins.at(i)(arcs.local_index({i, l}), arcs.local_index({i, j}));
}

}  // namespace qgwalk
