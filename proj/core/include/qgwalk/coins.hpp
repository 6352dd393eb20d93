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

// Coin families: Grover, Szegedy (from a transition matrix), quantum-graph
// coins H_j(k) built from edge lengths, vertex strengths and vector
// potentials, and the generalized alpha-family that contains both.

#include <vector>

#include "qgwalk/coin_set.hpp"
#include "qgwalk/graph.hpp"
#include "qgwalk/linalg.hpp"

namespace qgwalk {

/// (2/d) J_d - I_d. Throws ValidationError for d < 1.
ComplexMatrix grover_coin(int d);

CoinSet grover_coins(const Graph& g);

/// Random-walk transition probabilities p_{u,v}, stored per arc.
class TransitionMatrix {
 public:
  /// probabilities[index_of(u,v)] = p_{u,v}. Rows must sum to 1 within 1e-12
  /// and entries lie in [0,1]; throws ValidationError naming the row.
  TransitionMatrix(ArcSpace arcs, std::vector<double> probabilities);

  /// p_{u,v} = 1/d_u.
  static TransitionMatrix uniform(const ArcSpace& arcs);
  /// p_{u,v} = w_{uv} / sum_l w_{ul} for positive symmetric edge weights
  /// (indexed like Graph::edges()). Always reversible.
  static TransitionMatrix from_edge_weights(const ArcSpace& arcs, const std::vector<double>& weights);
  /// Random positive symmetric weights in [0.1, 1.1).
  static TransitionMatrix random_reversible(const ArcSpace& arcs, std::mt19937_64& rng);

  const ArcSpace& arc_space() const noexcept { return arcs_; }
  double operator()(Vertex u, Vertex v) const;
  double at(std::size_t arc_index) const { return p_.at(arc_index); }

 private:
  ArcSpace arcs_;
  std::vector<double> p_;
};

/// <e_m|H_j|e_l> = 2 sqrt(p_{j,l} p_{j,m}) - delta_{lm}.
CoinSet szegedy_coins(const TransitionMatrix& p);

/// Vertex condition strength lambda in [0, inf]; infinity (Dirichlet) is a
/// distinguished state rather than a floating-point overflow.
class VertexStrength {
 public:
  VertexStrength() = default;
  /// Throws ValidationError for negative or non-finite values.
  static VertexStrength finite(double lambda);
  static VertexStrength dirichlet() { return VertexStrength(0.0, true); }
  static VertexStrength neumann() { return VertexStrength(0.0, false); }

  bool is_dirichlet() const noexcept { return dirichlet_; }
  /// Only meaningful when !is_dirichlet().
  double value() const noexcept { return value_; }

  friend bool operator==(const VertexStrength&, const VertexStrength&) = default;

 private:
  VertexStrength(double v, bool d) : value_(v), dirichlet_(d) {}
  double value_ = 0.0;
  bool dirichlet_ = false;
};

/// The quantum-graph triple (L, lambda, A). Lengths and potentials are per
/// edge in Graph::edges() order; the potential of edge {i,j} is stated for the
/// orientation lo -> hi, so on arcs A_(i,j) = sgn(j - i) A_{ij}.
class QuantumGraphParams {
 public:
  QuantumGraphParams(Graph g, std::vector<double> lengths, std::vector<VertexStrength> strengths,
                     std::vector<double> potentials);

  static QuantumGraphParams uniform(const Graph& g, double length, VertexStrength strength,
                                    double potential = 0.0);

  const Graph& graph() const noexcept { return graph_; }
  double length(std::size_t edge) const { return lengths_.at(edge); }
  double length(Arc a) const { return lengths_.at(graph_.edge_index(a.origin, a.terminus)); }
  const VertexStrength& strength(Vertex v) const { return strengths_.at(static_cast<std::size_t>(v - 1)); }
  double potential(std::size_t edge) const { return potentials_.at(edge); }
  /// A_(i,j) = sgn(j - i) A_{ij}.
  double arc_potential(Arc a) const;
  bool all_lengths_positive() const noexcept;
  const std::vector<double>& lengths() const noexcept { return lengths_; }
  const std::vector<double>& potentials() const noexcept { return potentials_; }

 private:
  Graph graph_;
  std::vector<double> lengths_;
  std::vector<VertexStrength> strengths_;
  std::vector<double> potentials_;
};

/// e^{i L_{ij} (k - A_(i,j))}, the phase carried by the outgoing arc (i,j).
Complex arc_phase(const QuantumGraphParams& q, Arc a, double k);

/// rho_j(k) in (-pi, pi] with e^{i rho} = (1 + i lambda/(k d))/(1 - i lambda/(k d));
/// 0 for lambda = 0, pi for Dirichlet. Throws ValidationError for k <= 0.
double rho(const VertexStrength& lambda, int degree, double k);

/// <e_m|H_j(k)|e_l> = (2/(d_j + i lambda_j/k) - delta_{lm}) e^{i L_{jm}(k - A_(jm))};
/// Dirichlet vertices get -D_j(k).
CoinSet quantum_graph_coins(const QuantumGraphParams& q, double k);

/// Unit vectors alpha_j in H_j, one per vertex, in neighbor order.
class AlphaWeights {
 public:
  /// Throws ValidationError unless every vector has length d_j and unit norm
  /// within 1e-12.
  AlphaWeights(const Graph& g, std::vector<ComplexVector> alphas);

  static AlphaWeights uniform(const Graph& g);
  /// alpha_{jl} = sqrt(p_{j,l}).
  static AlphaWeights from_transition(const TransitionMatrix& p);

  const ComplexVector& at(Vertex j) const { return alphas_.at(static_cast<std::size_t>(j - 1)); }

 private:
  std::vector<ComplexVector> alphas_;
};

/// H_j(k) = D_j(k) ((1 + e^{-i rho_j(k)}) |alpha_j><alpha_j| - I).
CoinSet generalized_coins(const QuantumGraphParams& q, const AlphaWeights& w, double k);

}  // namespace qgwalk
