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

#include "qgwalk/szegedy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qgwalk/error.hpp"

namespace qgwalk {

namespace {

constexpr double kDegenerateNorm = 1e-10;

// A|j> = sum_l sqrt(p_{j,l}) |j,l>, a 2|E| x |V| isometry.
ComplexMatrix lift_map(const TransitionMatrix& p) {
  const ArcSpace& arcs = p.arc_space();
  ComplexMatrix a = ComplexMatrix::Zero(static_cast<Eigen::Index>(arcs.size()), arcs.graph().vertex_count());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    a(static_cast<Eigen::Index>(i), arcs.arc(i).origin - 1) = std::sqrt(p.at(i));
  }
  return a;
}

bool is_unit_nu(double nu) { return std::abs(std::abs(nu) - 1.0) <= 1e-10; }

// acos has infinite slope at +-1, so rounding in nu would show up as a
// ~1e-8 error in theta.
double snap_unit(double nu) {
  if (std::abs(nu - 1.0) < 1e-12) return 1.0;
  if (std::abs(nu + 1.0) < 1e-12) return -1.0;
  return std::clamp(nu, -1.0, 1.0);
}

}  // namespace

RealMatrix j_matrix(const TransitionMatrix& p) {
  const Graph& g = p.arc_space().graph();
  RealMatrix j = RealMatrix::Zero(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    const double v = std::sqrt(p(e.lo, e.hi) * p(e.hi, e.lo));
    j(e.lo - 1, e.hi - 1) = v;
    j(e.hi - 1, e.lo - 1) = v;
  }
  return j;
}

EvolutionOperator szegedy_walk(const TransitionMatrix& p) {
  return evolution(WalkKind::A, flip_flop_partition(p.arc_space()), szegedy_coins(p));
}

std::vector<Complex> SpectralResult::predicted() const {
  std::vector<Complex> out;
  out.reserve(mapped.size() + leftover.size());
  for (const auto& m : mapped) out.push_back(m.value);
  out.insert(out.end(), leftover.begin(), leftover.end());
  return out;
}

SpectralResult szegedy_spectrum(const TransitionMatrix& p) {
  const Graph& g = p.arc_space().graph();
  const auto n_v = static_cast<long>(g.vertex_count());
  const auto n_e = static_cast<long>(g.edge_count());
  const bool tree = n_e == n_v - 1;

  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(j_matrix(p));
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition of J failed");

  const EvolutionOperator u = szegedy_walk(p);
  const ComplexMatrix s = shift_operator(u.partition);
  const ComplexMatrix a = lift_map(p);

  SpectralResult result;
  for (Eigen::Index idx = 0; idx < solver.eigenvalues().size(); ++idx) {
    const double nu = snap_unit(solver.eigenvalues()(idx));
    const double theta = std::acos(nu);
    const ComplexVector base = a * solver.eigenvectors().col(idx).cast<Complex>();
    for (int sign : {+1, -1}) {
      if (sign == -1 && tree && is_unit_nu(nu)) continue;
      MappedEigenvalue m;
      m.nu = nu;
      m.sign = sign;
      m.value = std::polar(1.0, sign * theta);
      m.vector = base - m.value * (s * base);
      const double norm = m.vector.norm();
      m.degenerate = norm < kDegenerateNorm;
      if (m.degenerate) {
        ++result.degenerate_count;
      } else {
        m.residual = (u.matrix * m.vector - m.value * m.vector).norm() / norm;
        result.max_residual = std::max(result.max_residual, m.residual);
      }
      result.mapped.push_back(std::move(m));
    }
  }
  for (long extra = 0; extra < n_e - n_v; ++extra) {
    result.leftover.emplace_back(1.0, 0.0);
    result.leftover.emplace_back(-1.0, 0.0);
  }
  return result;
}

std::vector<Complex> direct_spectrum(const EvolutionOperator& u) {
  std::vector<Complex> values = eigenvalues(u.matrix);
  for (const Complex& z : values) {
    if (std::abs(std::abs(z) - 1.0) > 1e-10) {
      throw NumericalError("eigenvalue of modulus " + std::to_string(std::abs(z)) + " in a unitary spectrum");
    }
  }
  return values;
}

double angular_distance(Complex a, Complex b) { return std::abs(std::arg(a * std::conj(b))); }

SpectrumMatch compare_spectra(const std::vector<Complex>& predicted, const std::vector<Complex>& direct,
                              double tol) {
  if (predicted.size() != direct.size()) {
    throw ValidationError("spectra have different sizes: " + std::to_string(predicted.size()) + " vs " +
                          std::to_string(direct.size()));
  }
  auto by_phase = [](Complex x, Complex y) { return std::arg(x) < std::arg(y); };
  std::vector<Complex> pred = predicted;
  std::vector<Complex> dir = direct;
  std::sort(pred.begin(), pred.end(), by_phase);
  std::sort(dir.begin(), dir.end(), by_phase);

  SpectrumMatch match;
  match.tol = tol;
  std::vector<bool> used(dir.size(), false);
  for (const Complex& z : pred) {
    std::size_t best = dir.size();
    double best_dist = 0.0;
    for (std::size_t i = 0; i < dir.size(); ++i) {
      if (used[i]) continue;
      const double d = angular_distance(z, dir[i]);
      if (best == dir.size() || d < best_dist) {
        best = i;
        best_dist = d;
      }
    }
    used[best] = true;
    match.max_mismatch = std::max(match.max_mismatch, best_dist);
    if (best_dist > tol) ++match.unmatched;
  }
  return match;
}

}  // namespace qgwalk
