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

#include "qgwalk/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qgwalk/error.hpp"

namespace qgwalk {

namespace {

constexpr Complex kI(0.0, 1.0);

int wrap(int j, int n) { return ((j % n) + n) % n; }

}  // namespace

WalkState WalkState::make(ComplexVector amplitudes, int time) {
  if (time < 0) throw ValidationError("walk state time must be nonnegative");
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    throw ValidationError("walk state must have unit norm, got " + std::to_string(norm));
  }
  return WalkState{std::move(amplitudes), time};
}

WalkState WalkState::at_arc(const ArcSpace& arcs, Arc a) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(arcs.size()));
  v(static_cast<Eigen::Index>(arcs.index_of(a))) = 1.0;
  return WalkState{std::move(v), 0};
}

WalkState WalkState::local(const ArcSpace& arcs, Vertex origin, const ComplexVector& phi) {
  const int d = arcs.graph().degree(origin);
  if (phi.size() != d) {
    throw ValidationError("local vector at vertex " + std::to_string(origin) + " must have " +
                          std::to_string(d) + " entries");
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(arcs.size()));
  v.segment(static_cast<Eigen::Index>(arcs.block_offset(origin)), d) = phi;
  return make(std::move(v));
}

WalkState evolve(const EvolutionOperator& u, const WalkState& s, int steps) {
  if (steps < 0) throw ValidationError("steps must be nonnegative");
  if (s.amplitudes.size() != u.matrix.cols()) {
    throw ValidationError("state dimension " + std::to_string(s.amplitudes.size()) +
                          " does not match operator dimension " + std::to_string(u.matrix.cols()));
  }
  ComplexVector v = s.amplitudes;
  for (int t = 0; t < steps; ++t) v = u.matrix * v;
  return WalkState{std::move(v), s.time + steps};
}

double Distribution::total() const {
  double sum = 0.0;
  for (double m : mass) sum += m;
  return sum;
}

Distribution finding_probability(const ArcSpace& arcs, const WalkState& s) {
  if (s.amplitudes.size() != static_cast<Eigen::Index>(arcs.size())) {
    throw ValidationError("state dimension does not match the arc space");
  }
  Distribution dist;
  dist.mass.assign(static_cast<std::size_t>(arcs.graph().vertex_count()), 0.0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    dist.mass[static_cast<std::size_t>(arcs.arc(i).origin - 1)] +=
        std::norm(s.amplitudes(static_cast<Eigen::Index>(i)));
  }
  return dist;
}

ComplexMatrix step_weight(const Partition& p, const CoinSet& coins, WalkKind kind, Vertex u, Vertex v) {
  const ArcSpace& arcs = p.arc_space();
  const Graph& g = arcs.graph();
  if (!g.adjacent(u, v)) throw ValidationError("step weight requested for a non-edge");
  // |e^(v)_{f(u,v)}><e^(u)_v|, a d_v x d_u matrix unit
  ComplexMatrix unit = ComplexMatrix::Zero(g.degree(v), g.degree(u));
  unit(arcs.local_index({v, p.successor({u, v})}), arcs.local_index({u, v})) = 1.0;
  return kind == WalkKind::G ? ComplexMatrix(coins.at(v) * unit) : ComplexMatrix(unit * coins.at(u));
}

double path_measure_oracle(const Partition& p, const CoinSet& coins, WalkKind kind, Vertex origin,
                           const ComplexVector& phi, int n, const std::set<Vertex>& event) {
  if (n < 0 || n > kPathOracleMaxSteps) {
    throw ValidationError("path oracle supports 0 <= n <= " + std::to_string(kPathOracleMaxSteps));
  }
  const Graph& g = p.arc_space().graph();
  if (phi.size() != g.degree(origin)) throw ValidationError("phi has the wrong dimension");

  // Sum the path amplitudes separately per end vertex; different end vertices
  // live in orthogonal subspaces H_u.
  std::vector<ComplexVector> ends(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex u = 1; u <= g.vertex_count(); ++u) {
    ends[static_cast<std::size_t>(u - 1)] = ComplexVector::Zero(g.degree(u));
  }
  std::function<void(Vertex, const ComplexVector&, int)> walk = [&](Vertex at, const ComplexVector& amp,
                                                                    int remaining) {
    if (remaining == 0) {
      ends[static_cast<std::size_t>(at - 1)] += amp;
      return;
    }
    for (Vertex next : g.neighbors(at)) {
      walk(next, step_weight(p, coins, kind, at, next) * amp, remaining - 1);
    }
  };
  walk(origin, phi, n);

  double measure = 0.0;
  for (Vertex u : event) {
    if (u < 1 || u > g.vertex_count()) throw ValidationError("event vertex out of range");
    measure += ends[static_cast<std::size_t>(u - 1)].squaredNorm();
  }
  return measure;
}

// ---------------------------------------------------------------------------

ComplexMatrix one_dim_coin(double a, double b) {
  ComplexMatrix h(2, 2);
  h << Complex(a, 0.0), kI * b, kI * b, Complex(a, 0.0);
  return h;
}

OneDimWalk one_dim_walk(double a, double b, int sites, int steps, const std::vector<Spinor>& initial) {
  if (std::abs(a * a + b * b - 1.0) > 1e-12) throw ValidationError("one_dim_walk requires a^2 + b^2 = 1");
  if (steps < 0) throw ValidationError("steps must be nonnegative");
  if (sites < 3 || sites <= 2 * steps + 2) {
    throw ValidationError("cycle size must exceed 2*steps + 2 (got " + std::to_string(sites) + ")");
  }
  if (initial.size() != static_cast<std::size_t>(sites)) {
    throw ValidationError("initial state must have one spinor per site");
  }
  OneDimWalk out;
  out.a = a;
  out.b = b;
  out.history.push_back(initial);
  for (int n = 1; n <= steps; ++n) {
    const auto& prev = out.history.back();
    std::vector<Spinor> next(static_cast<std::size_t>(sites));
    for (int j = 0; j < sites; ++j) {
      const Spinor& from_left = prev[static_cast<std::size_t>(wrap(j - 1, sites))];
      const Spinor& from_right = prev[static_cast<std::size_t>(wrap(j + 1, sites))];
      next[static_cast<std::size_t>(j)] = {a * from_left[0] + kI * b * from_right[1],
                                           kI * b * from_left[0] + a * from_right[1]};
    }
    out.history.push_back(std::move(next));
  }

  // psi_n(j) = Q psi_{n-1}(j-1) + P psi_{n-1}(j+1) with P, Q as 2x2 matrices
  Eigen::Matrix2cd P, Q;
  P << 0.0, kI * b, 0.0, a;
  Q << a, 0.0, kI * b, 0.0;
  auto as_vec = [](const Spinor& s) { return Eigen::Vector2cd(s[0], s[1]); };
  for (int n = 1; n <= steps; ++n) {
    for (int j = 0; j < sites; ++j) {
      Eigen::Vector2cd expect =
          Q * as_vec(out.history[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(wrap(j - 1, sites))]) +
          P * as_vec(out.history[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(wrap(j + 1, sites))]);
      double r = (expect - as_vec(out.history[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)]))
                     .cwiseAbs()
                     .maxCoeff();
      out.matrix_form_residual = std::max(out.matrix_form_residual, r);
    }
  }
  for (int n = 1; n + 1 <= steps; ++n) {
    for (int j = 0; j < sites; ++j) {
      for (int c = 0; c < 2; ++c) {
        auto at = [&](int t, int site) {
          return out.history[static_cast<std::size_t>(t)][static_cast<std::size_t>(wrap(site, sites))]
                            [static_cast<std::size_t>(c)];
        };
        Complex lhs = at(n + 1, j) + at(n - 1, j);
        Complex rhs = a * (at(n, j - 1) + at(n, j + 1));
        out.klein_gordon_residual = std::max(out.klein_gordon_residual, std::abs(lhs - rhs));
      }
    }
  }
  return out;
}

Partition straight_partition(const ArcSpace& cycle_arcs) {
  const Graph& g = cycle_arcs.graph();
  std::vector<Vertex> successor(cycle_arcs.size());
  for (std::size_t idx = 0; idx < cycle_arcs.size(); ++idx) {
    const Arc& a = cycle_arcs.arc(idx);
    const auto& nbrs = g.neighbors(a.terminus);
    if (nbrs.size() != 2) throw ValidationError("straight partition needs a 2-regular graph");
    successor[idx] = nbrs[0] == a.origin ? nbrs[1] : nbrs[0];
  }
  return Partition::from_successors(cycle_arcs, std::move(successor));
}

OneDimEngineCheck one_dim_engine_check(double a, double b, int sites, int steps,
                                       const std::vector<Spinor>& initial) {
  const OneDimWalk line = one_dim_walk(a, b, sites, steps, initial);
  const ArcSpace arcs(cycle_graph(sites));
  const Graph& g = arcs.graph();

  // site j <-> vertex j+1; R slot is the arc towards j+1, L slot towards j-1
  auto vertex_of = [&](int site) { return wrap(site, sites) + 1; };
  auto right_arc = [&](int site) { return Arc{vertex_of(site), vertex_of(site + 1)}; };
  auto left_arc = [&](int site) { return Arc{vertex_of(site), vertex_of(site - 1)}; };

  const ComplexMatrix h = one_dim_coin(a, b);
  std::vector<ComplexMatrix> local;
  for (int site = 0; site < sites; ++site) {
    const int r = arcs.local_index(right_arc(site));
    const int l = arcs.local_index(left_arc(site));
    ComplexMatrix m(2, 2);
    m(r, r) = h(0, 0);
    m(r, l) = h(0, 1);
    m(l, r) = h(1, 0);
    m(l, l) = h(1, 1);
    local.push_back(std::move(m));
  }
  const CoinSet coins(g, std::move(local));

  auto to_arcs = [&](const std::vector<Spinor>& spinors) {
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(arcs.size()));
    for (int site = 0; site < sites; ++site) {
      v(static_cast<Eigen::Index>(arcs.index_of(right_arc(site)))) = spinors[static_cast<std::size_t>(site)][0];
      v(static_cast<Eigen::Index>(arcs.index_of(left_arc(site)))) = spinors[static_cast<std::size_t>(site)][1];
    }
    return v;
  };

  const Partition straight = straight_partition(arcs);
  const Partition ff = flip_flop_partition(arcs);
  const ComplexMatrix ug = evolution(WalkKind::G, straight, coins).matrix;
  const ComplexMatrix ua = evolution(WalkKind::A, ff, permuted_coins(coins, ff, straight)).matrix;
  const ComplexMatrix s_ff = shift_operator(ff);

  OneDimEngineCheck check;
  ComplexVector psi = to_arcs(initial);
  ComplexVector phi = s_ff * psi;
  for (int n = 0; n <= steps; ++n) {
    const ComplexVector expect = to_arcs(line.history[static_cast<std::size_t>(n)]);
    check.g_type_straight_residual =
        std::max(check.g_type_straight_residual, (psi - expect).cwiseAbs().maxCoeff());
    check.a_type_flip_flop_residual =
        std::max(check.a_type_flip_flop_residual, (s_ff * phi - expect).cwiseAbs().maxCoeff());
    psi = ug * psi;
    phi = ua * phi;
  }
  return check;
}

}  // namespace qgwalk
