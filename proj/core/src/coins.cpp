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

#include "qgwalk/coins.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qgwalk/error.hpp"

namespace qgwalk {

namespace {

constexpr Complex kI(0.0, 1.0);

void require_positive_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw ValidationError("wavenumber k must be positive and finite, got " + std::to_string(k));
  }
}

}  // namespace

ComplexMatrix grover_coin(int d) {
  if (d < 1) throw ValidationError("grover_coin: degree must be at least 1");
  ComplexMatrix h = ComplexMatrix::Constant(d, d, Complex(2.0 / d, 0.0));
  h.diagonal().array() -= 1.0;
  return h;
}

CoinSet grover_coins(const Graph& g) {
  std::vector<ComplexMatrix> coins;
  for (Vertex j = 1; j <= g.vertex_count(); ++j) coins.push_back(grover_coin(g.degree(j)));
  return CoinSet(g, std::move(coins));
}

// ---------------------------------------------------------------------------

TransitionMatrix::TransitionMatrix(ArcSpace arcs, std::vector<double> probabilities)
    : arcs_(std::move(arcs)), p_(std::move(probabilities)) {
  if (p_.size() != arcs_.size()) {
    throw ValidationError("transition matrix needs one probability per arc");
  }
  const Graph& g = arcs_.graph();
  for (Vertex u = 1; u <= g.vertex_count(); ++u) {
    double row = 0.0;
    for (Vertex v : g.neighbors(u)) {
      double p = p_[arcs_.index_of({u, v})];
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("p(" + std::to_string(u) + "," + std::to_string(v) + ") = " +
                              std::to_string(p) + " outside [0,1]");
      }
      row += p;
    }
    if (std::abs(row - 1.0) > 1e-12) {
      throw ValidationError("row " + std::to_string(u) + " of the transition matrix sums to " +
                            std::to_string(row));
    }
  }
}

TransitionMatrix TransitionMatrix::uniform(const ArcSpace& arcs) {
  std::vector<double> p(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    p[i] = 1.0 / arcs.graph().degree(arcs.arc(i).origin);
  }
  return TransitionMatrix(arcs, std::move(p));
}

TransitionMatrix TransitionMatrix::from_edge_weights(const ArcSpace& arcs, const std::vector<double>& weights) {
  const Graph& g = arcs.graph();
  if (weights.size() != g.edge_count()) throw ValidationError("need one weight per edge");
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw ValidationError("edge weights must be positive");
  }
  std::vector<double> total(static_cast<std::size_t>(g.vertex_count()), 0.0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    total[static_cast<std::size_t>(g.edges()[e].lo - 1)] += weights[e];
    total[static_cast<std::size_t>(g.edges()[e].hi - 1)] += weights[e];
  }
  std::vector<double> p(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs.arc(i);
    p[i] = weights[g.edge_index(a.origin, a.terminus)] / total[static_cast<std::size_t>(a.origin - 1)];
  }
  return TransitionMatrix(arcs, std::move(p));
}

TransitionMatrix TransitionMatrix::random_reversible(const ArcSpace& arcs, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> w(0.1, 1.1);
  std::vector<double> weights(arcs.graph().edge_count());
  for (auto& x : weights) x = w(rng);
  return from_edge_weights(arcs, weights);
}

double TransitionMatrix::operator()(Vertex u, Vertex v) const {
  if (!arcs_.contains({u, v})) return 0.0;
  return p_[arcs_.index_of({u, v})];
}

CoinSet szegedy_coins(const TransitionMatrix& p) {
  const ArcSpace& arcs = p.arc_space();
  const Graph& g = arcs.graph();
  std::vector<ComplexMatrix> coins;
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    const int d = g.degree(j);
    Eigen::VectorXd root(d);
    for (int l = 0; l < d; ++l) root(l) = std::sqrt(p.at(arcs.block_offset(j) + static_cast<std::size_t>(l)));
    ComplexMatrix h = (2.0 * root * root.transpose()).cast<Complex>();
    h.diagonal().array() -= 1.0;
    coins.push_back(std::move(h));
  }
  return CoinSet(g, std::move(coins));
}

// ---------------------------------------------------------------------------

VertexStrength VertexStrength::finite(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw ValidationError("vertex strength must be a finite nonnegative number or Dirichlet, got " +
                          std::to_string(lambda));
  }
  return VertexStrength(lambda, false);
}

QuantumGraphParams::QuantumGraphParams(Graph g, std::vector<double> lengths,
                                       std::vector<VertexStrength> strengths,
                                       std::vector<double> potentials)
    : graph_(std::move(g)),
      lengths_(std::move(lengths)),
      strengths_(std::move(strengths)),
      potentials_(std::move(potentials)) {
  if (lengths_.size() != graph_.edge_count()) throw ValidationError("need one length per edge");
  if (potentials_.size() != graph_.edge_count()) throw ValidationError("need one potential per edge");
  if (strengths_.size() != static_cast<std::size_t>(graph_.vertex_count())) {
    throw ValidationError("need one vertex strength per vertex");
  }
  for (std::size_t e = 0; e < lengths_.size(); ++e) {
    const Edge& edge = graph_.edges()[e];
    const std::string name = "{" + std::to_string(edge.lo) + "," + std::to_string(edge.hi) + "}";
    if (!std::isfinite(lengths_[e]) || lengths_[e] < 0.0) {
      throw ValidationError("length of edge " + name + " must be finite and nonnegative");
    }
    if (!std::isfinite(potentials_[e])) {
      throw ValidationError("potential of edge " + name + " must be finite");
    }
  }
}

QuantumGraphParams QuantumGraphParams::uniform(const Graph& g, double length, VertexStrength strength,
                                               double potential) {
  return QuantumGraphParams(g, std::vector<double>(g.edge_count(), length),
                            std::vector<VertexStrength>(static_cast<std::size_t>(g.vertex_count()), strength),
                            std::vector<double>(g.edge_count(), potential));
}

double QuantumGraphParams::arc_potential(Arc a) const {
  const double value = potentials_.at(graph_.edge_index(a.origin, a.terminus));
  return a.terminus > a.origin ? value : -value;
}

bool QuantumGraphParams::all_lengths_positive() const noexcept {
  for (double l : lengths_)
    if (!(l > 0.0)) return false;
  return true;
}

Complex arc_phase(const QuantumGraphParams& q, Arc a, double k) {
  return std::exp(kI * (q.length(a) * (k - q.arc_potential(a))));
}

double rho(const VertexStrength& lambda, int degree, double k) {
  require_positive_k(k);
  if (degree < 1) throw ValidationError("rho: degree must be positive");
  if (lambda.is_dirichlet()) return std::numbers::pi;
  // arg((1 + ix)/(1 - ix)) = 2 atan(x), x = lambda/(k d) >= 0
  return 2.0 * std::atan2(lambda.value(), k * degree);
}

CoinSet quantum_graph_coins(const QuantumGraphParams& q, double k) {
  require_positive_k(k);
  const Graph& g = q.graph();
  std::vector<ComplexMatrix> coins;
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    const auto& nbrs = g.neighbors(j);
    const int d = static_cast<int>(nbrs.size());
    const VertexStrength& lambda = q.strength(j);
    Complex weight(2.0 / d, 0.0);
    if (lambda.is_dirichlet()) {
      weight = 0.0;
    } else if (lambda.value() != 0.0) {
      weight = 2.0 / (Complex(d, 0.0) + kI * (lambda.value() / k));
    }
    ComplexMatrix h(d, d);
    for (int m = 0; m < d; ++m) {
      const Complex phase = arc_phase(q, {j, nbrs[static_cast<std::size_t>(m)]}, k);
      for (int l = 0; l < d; ++l) h(m, l) = (weight - (l == m ? 1.0 : 0.0)) * phase;
    }
    coins.push_back(std::move(h));
  }
  return CoinSet(g, std::move(coins));
}

// ---------------------------------------------------------------------------

AlphaWeights::AlphaWeights(const Graph& g, std::vector<ComplexVector> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw ValidationError("need one alpha vector per vertex");
  }
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    const ComplexVector& a = at(j);
    if (a.size() != g.degree(j)) {
      throw ValidationError("alpha vector at vertex " + std::to_string(j) + " has wrong length");
    }
    if (std::abs(a.squaredNorm() - 1.0) > 1e-12) {
      throw ValidationError("alpha vector at vertex " + std::to_string(j) + " is not a unit vector");
    }
  }
}

AlphaWeights AlphaWeights::uniform(const Graph& g) {
  std::vector<ComplexVector> alphas;
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    const int d = g.degree(j);
    alphas.push_back(ComplexVector::Constant(d, Complex(1.0 / std::sqrt(static_cast<double>(d)), 0.0)));
  }
  return AlphaWeights(g, std::move(alphas));
}

AlphaWeights AlphaWeights::from_transition(const TransitionMatrix& p) {
  const ArcSpace& arcs = p.arc_space();
  const Graph& g = arcs.graph();
  std::vector<ComplexVector> alphas;
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    ComplexVector a(g.degree(j));
    for (int l = 0; l < g.degree(j); ++l) {
      a(l) = std::sqrt(p.at(arcs.block_offset(j) + static_cast<std::size_t>(l)));
    }
    alphas.push_back(std::move(a));
  }
  return AlphaWeights(g, std::move(alphas));
}

CoinSet generalized_coins(const QuantumGraphParams& q, const AlphaWeights& w, double k) {
  require_positive_k(k);
  const Graph& g = q.graph();
  std::vector<ComplexMatrix> coins;
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    const auto& nbrs = g.neighbors(j);
    const int d = static_cast<int>(nbrs.size());
    const Complex factor = 1.0 + std::exp(-kI * rho(q.strength(j), d, k));
    const ComplexVector& alpha = w.at(j);
    ComplexMatrix h = factor * (alpha * alpha.adjoint());
    h.diagonal().array() -= 1.0;
    for (int m = 0; m < d; ++m) h.row(m) *= arc_phase(q, {j, nbrs[static_cast<std::size_t>(m)]}, k);
    coins.push_back(std::move(h));
  }
  return CoinSet(g, std::move(coins));
}

}  // namespace qgwalk
