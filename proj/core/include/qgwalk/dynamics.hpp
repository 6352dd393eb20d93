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

#include <array>
#include <set>
#include <vector>

#include "qgwalk/operators.hpp"

namespace qgwalk {

/// Amplitudes over the arc space at a given time. Norm 1 within 1e-12.
struct WalkState {
  ComplexVector amplitudes;
  int time = 0;

  /// Throws ValidationError unless ||amplitudes|| = 1 within 1e-12.
  static WalkState make(ComplexVector amplitudes, int time = 0);
  /// |origin, terminus>.
  static WalkState at_arc(const ArcSpace& arcs, Arc a);
  /// phi placed in H_origin (phi in neighbor order, unit norm).
  static WalkState local(const ArcSpace& arcs, Vertex origin, const ComplexVector& phi);
};

/// U^steps applied to s. Throws ValidationError on dimension mismatch or
/// negative steps.
WalkState evolve(const EvolutionOperator& u, const WalkState& s, int steps);

/// Per-vertex finding probabilities; mass[u-1] = sum_{v in N(u)} |<u,v|psi>|^2.
struct Distribution {
  std::vector<double> mass;

  double at(Vertex u) const { return mass.at(static_cast<std::size_t>(u - 1)); }
  double total() const;
};

Distribution finding_probability(const ArcSpace& arcs, const WalkState& s);

inline constexpr int kPathOracleMaxSteps = 6;

/// Brute-force path-sum measure of the vertex event set after n steps from
/// origin: || sum over vertex paths (origin, x_1, ..., x_n) ending in the event
/// of W_(x_{n-1},x_n) ... W_(origin,x_1) phi ||^2, where W_(u,v) is the
/// matrix-valued weight H_u -> H_v of the coined walk. Independent of the
/// dense evolution operator. Throws ValidationError for n > 6.
double path_measure_oracle(const Partition& p, const CoinSet& coins, WalkKind kind, Vertex origin,
                           const ComplexVector& phi, int n, const std::set<Vertex>& event);

/// W_(u,v): the d_v x d_u weight for moving from u to v.
ComplexMatrix step_weight(const Partition& p, const CoinSet& coins, WalkKind kind, Vertex u, Vertex v);

/// Two-component (right, left) amplitude at a site of Z_N.
using Spinor = std::array<Complex, 2>;

struct OneDimWalk {
  double a = 0.0;
  double b = 0.0;
  /// history[n][j] is (psi_n^R(j), psi_n^L(j)), j in Z_N.
  std::vector<std::vector<Spinor>> history;
  /// max |psi_n(j) - (Q psi_{n-1}(j-1) + P psi_{n-1}(j+1))| over n >= 1.
  double matrix_form_residual = 0.0;
  /// max |psi_{n+1} + psi_{n-1} - a (psi_n(j-1) + psi_n(j+1))| over interior
  /// times and both components.
  double klein_gordon_residual = 0.0;
};

/// The walk on the line with coin parameters a^2 + b^2 = 1:
///   psi_n^R(j) = a psi_{n-1}^R(j-1) + i b psi_{n-1}^L(j+1)
///   psi_n^L(j) = i b psi_{n-1}^R(j-1) + a psi_{n-1}^L(j+1)
/// realized on the cycle Z_N with N > 2 steps + 2. Throws ValidationError if
/// |a^2 + b^2 - 1| > 1e-12, the initial state has the wrong size, or N is too
/// small.
OneDimWalk one_dim_walk(double a, double b, int sites, int steps, const std::vector<Spinor>& initial);

/// Coin of the line walk in (right, left) order: [[a, ib], [ib, a]].
ComplexMatrix one_dim_coin(double a, double b);

struct OneDimEngineCheck {
  /// G-type walk on the cycle graph with the straight-through partition and
  /// the line coin: max amplitude difference over all times.
  double g_type_straight_residual = 0.0;
  /// A-type flip-flop walk with coins H P_{ff,straight}, started from
  /// S_ff psi_0 and read back through S_ff.
  double a_type_flip_flop_residual = 0.0;
};

/// Runs the same initial state through the general engine and compares it
/// with one_dim_walk amplitudes under |j,j+1> <-> R, |j,j-1> <-> L.
OneDimEngineCheck one_dim_engine_check(double a, double b, int sites, int steps,
                                       const std::vector<Spinor>& initial);

/// The partition on the cycle graph that always continues straight:
/// f(j-1, j) = j+1 and f(j+1, j) = j-1 (indices mod N).
Partition straight_partition(const ArcSpace& cycle_arcs);

}  // namespace qgwalk
