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

#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "qgwalk/error.hpp"
#include "qgwalk/quantum_graph.hpp"

namespace qgwalk {
namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

QuantumGraphParams k2(double len, VertexStrength s = VertexStrength::neumann(), double a = 0.0) {
  return QuantumGraphParams::uniform(path_graph(2), len, s, a);
}

std::vector<double> root_values(const SecularScan& scan) {
  std::vector<double> out;
  for (const Root& r : scan.roots) out.push_back(r.k);
  return out;
}

void expect_same_roots(const std::vector<double>& got, const std::vector<double>& expect, double tol) {
  ASSERT_EQ(got.size(), expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expect[i], tol) << "root " << i;
}

TEST(BuildWalk, K2IsPhaseTimesSwap) {
  const double len = 0.8, k = 1.7;
  const ComplexMatrix u = build_walk(k2(len), k).matrix;
  const Complex phase = std::exp(kI * k * len);
  EXPECT_NEAR(std::abs(u(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 1) - phase), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 0) - phase), 0.0, 1e-15);
  EXPECT_THROW(build_walk(k2(len), 0.0), ValidationError);
  // singular values of I - e^{ikL} swap are |1 - e^{ikL}| and |1 + e^{ikL}|
  EXPECT_NEAR(stationarity_indicator(k2(len), k), std::min(std::abs(1.0 - phase), std::abs(1.0 + phase)), 1e-14);
}

TEST(ScanRoots, K2MatchesIntervalSpectrum) {
  for (double len : {1.0, 0.7}) {
    for (VertexStrength s : {VertexStrength::neumann(), VertexStrength::dirichlet()}) {
      const SecularScan scan = scan_roots(k2(len, s), 0.1, 12.0);
      expect_same_roots(root_values(scan), testing::interval_roots(len, 0.1, 12.0), 1e-8);
      for (const Root& r : scan.roots) {
        EXPECT_EQ(r.multiplicity, 1);
        EXPECT_LE(r.residual, 1e-9);
      }
      EXPECT_EQ(scan.k.size(), scan.indicator.size());
      EXPECT_EQ(scan.k.size(), scan.determinant.size());
    }
  }
}

TEST(ScanRoots, StarMatchesShootingOracle) {
  const QuantumGraphParams q = QuantumGraphParams::uniform(star_graph(3), 1.0, VertexStrength::neumann());
  const SecularScan scan = scan_roots(q, 0.1, 5.0);
  expect_same_roots(root_values(scan), testing::star_shooting_roots(3, 1.0, 0.1, 5.0), 1e-7);
  ASSERT_EQ(scan.roots.size(), 3u);
  EXPECT_EQ(scan.roots[0].multiplicity, 2);  // cos kL = 0: two independent leaf combinations
  EXPECT_EQ(scan.roots[1].multiplicity, 1);
  EXPECT_EQ(scan.roots[2].multiplicity, 2);
}

TEST(ScanRoots, ThreadCountDoesNotChangeResult) {
  const QuantumGraphParams q = QuantumGraphParams::uniform(cycle_graph(3), 1.3, VertexStrength::finite(0.5));
  ScanOptions one;
  one.threads = 1;
  ScanOptions four;
  four.threads = 4;
  const SecularScan a = scan_roots(q, 0.5, 5.0, one);
  const SecularScan b = scan_roots(q, 0.5, 5.0, four);
  EXPECT_EQ(a.indicator, b.indicator);
  EXPECT_EQ(root_values(a), root_values(b));
}

TEST(ScanRoots, GaugeInvarianceOnTrees) {
  for (const Graph& g : {path_graph(2), star_graph(3)}) {
    const QuantumGraphParams flat = QuantumGraphParams::uniform(g, 1.0, VertexStrength::neumann());
    const QuantumGraphParams gauged = QuantumGraphParams::uniform(g, 1.0, VertexStrength::neumann(), 0.7);
    expect_same_roots(root_values(scan_roots(gauged, 0.1, 4.0)), root_values(scan_roots(flat, 0.1, 4.0)), 1e-8);
  }
}

TEST(ScanRoots, Validation) {
  EXPECT_THROW(scan_roots(k2(1.0), 2.0, 1.0), ValidationError);
  EXPECT_THROW(scan_roots(k2(1.0), 0.0, 1.0), ValidationError);
  EXPECT_THROW(scan_roots(k2(0.0), 0.5, 1.0), ValidationError);
}

TEST(StationaryVector, K2AtFirstRoot) {
  const QuantumGraphParams q = k2(1.0);
  const StationaryVector v = stationary_vector(q, kPi);
  EXPECT_NEAR(std::abs(v.a_star(0) - 1.0 / std::sqrt(2.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(v.a_star(1) + 1.0 / std::sqrt(2.0)), 0.0, 1e-12);
  EXPECT_LE(v.residual, 1e-12);
  EXPECT_THROW(stationary_vector(q, 2.0), ValidationError);
  EXPECT_GT(least_singular_vector(q, 2.0).residual, 1e-3);

  const ComplexVector b = b_from_a(v, q);
  // b_(1,2) = a_(2,1) e^{-i pi}
  EXPECT_NEAR(std::abs(b(0) - 1.0 / std::sqrt(2.0)), 0.0, 1e-12);
  EXPECT_LE((a_from_b(b, q, kPi) - v.a_star).norm(), 1e-12);
}

TEST(Wavefunction, K2IsACosine) {
  const QuantumGraphParams q = k2(1.0);
  const EigenfunctionSample e = wavefunction(stationary_vector(q, kPi), q, 21);
  ASSERT_EQ(e.arcs.size(), 2u);
  const ArcSamples& s = e.arcs[0];
  ASSERT_EQ(s.x.size(), 21u);
  EXPECT_EQ(s.x.front(), 0.0);
  EXPECT_EQ(s.x.back(), 1.0);
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    EXPECT_NEAR(std::abs(s.psi[i]), std::abs(s.psi[0]) * std::abs(std::cos(kPi * s.x[i])), 1e-12);
  }
  EXPECT_LE(e.matrix_form_residual, 1e-12);
  EXPECT_THROW(wavefunction(stationary_vector(q, kPi), q, 1), ValidationError);
}

TEST(BoundaryConditions, HoldAtRootsOnly) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Graph g = complete_graph(4);
  std::vector<double> lengths, potentials;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    lengths.push_back(0.5 + u(rng));
    potentials.push_back(u(rng) - 0.5);
  }
  std::vector<VertexStrength> s{VertexStrength::neumann(), VertexStrength::finite(1.5), VertexStrength::dirichlet(),
                                VertexStrength::finite(0.2)};
  const QuantumGraphParams q(g, lengths, s, potentials);
  const SecularScan scan = scan_roots(q, 0.5, 4.0);
  ASSERT_FALSE(scan.roots.empty());
  for (const Root& r : scan.roots) {
    if (r.multiplicity != 1) continue;
    const BoundaryReport report = verify_boundary_conditions(wavefunction(stationary_vector(q, r.k), q), q);
    EXPECT_TRUE(report.passed()) << "k = " << r.k << " residual " << report.max_residual;
    bool saw_dirichlet = false;
    for (const ConditionResidual& c : report.rows) saw_dirichlet |= c.vertex == 3 && c.condition == "dirichlet";
    EXPECT_TRUE(saw_dirichlet);
  }
  const double off = 0.5 * (scan.roots[0].k + (scan.roots.size() > 1 ? scan.roots[1].k : 4.0));
  const BoundaryReport bad = verify_boundary_conditions(wavefunction(least_singular_vector(q, off), q), q);
  EXPECT_GT(bad.max_residual, 1e-4);
}

TEST(Secular, ReducedMatchesPlainDeterminant) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 220; ++trial) {
    const Graph g = testing::random_small_graph(6, rng);
    std::vector<double> lengths, potentials;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      lengths.push_back(0.2 + 2.0 * u(rng));
      potentials.push_back(u(rng) - 0.5);
    }
    std::vector<VertexStrength> s;
    for (int v = 0; v < g.vertex_count(); ++v) {
      s.push_back(v == 0 && trial % 3 == 0 ? VertexStrength::dirichlet() : VertexStrength::finite(3.0 * u(rng)));
    }
    const QuantumGraphParams q(g, lengths, s, potentials);
    std::vector<ComplexVector> alphas;
    for (Vertex j = 1; j <= g.vertex_count(); ++j) {
      ComplexVector a(g.degree(j));
      for (int i = 0; i < a.size(); ++i) a(i) = std::polar(0.1 + u(rng), 2 * kPi * u(rng));
      alphas.push_back(a / a.norm());
    }
    const AlphaWeights w(g, alphas);
    const double k = 0.3 + 6.0 * u(rng);
    const Complex t = std::polar(1.5 * u(rng), 2 * kPi * u(rng));
    const ComplexMatrix walk =
        evolution(WalkKind::A, flip_flop_partition(ArcSpace(g)), generalized_coins(q, w, k)).matrix;
    const Complex oracle =
        testing::plain_determinant(ComplexMatrix::Identity(walk.rows(), walk.cols()) - t * walk);
    Complex reduced;
    try {
      reduced = secular_reduced(q, w, k, t);
    } catch (const PoleError&) {
      continue;
    }
    EXPECT_LE(std::abs(reduced - oracle), 1e-9 * std::max(1.0, std::abs(oracle))) << "trial " << trial;
    EXPECT_LE(std::abs(secular_direct(q, w, k, t) - oracle), 1e-9 * std::max(1.0, std::abs(oracle)));
    ++checked;
  }
  EXPECT_GE(checked, 200);
}

TEST(Secular, SpecialValues) {
  const QuantumGraphParams q = k2(1.0);
  const AlphaWeights w = AlphaWeights::uniform(q.graph());
  EXPECT_NEAR(std::abs(secular_reduced(q, w, 0.9, 0.0) - 1.0), 0.0, 1e-15);
  // det(I - i swap) = 2
  EXPECT_NEAR(std::abs(secular_reduced(q, w, kPi / 2, 1.0) - 2.0), 0.0, 1e-12);
  EXPECT_THROW(secular_reduced(q, w, kPi, 1.0), PoleError);
  // at the pole the regularized value approximates det(I - U) = det(I + swap) = 0
  EXPECT_LE(std::abs(secular_regularized(q, w, kPi)), 1e-6);
  EXPECT_NEAR(std::abs(secular_regularized(q, w, kPi / 2) - 2.0), 0.0, 1e-12);
}

TEST(StationarityForms, AllFourFormsAreStationary) {
  const QuantumGraphParams q(star_graph(3), {0.5, 1.0, 1.5}, std::vector<VertexStrength>(4, VertexStrength::finite(0.7)),
                             {0.3, -0.2, 0.1});
  const SecularScan scan = scan_roots(q, 0.5, 5.0);
  ASSERT_FALSE(scan.roots.empty());
  for (const Root& r : scan.roots) {
    const StationarityForms p = stationarity_forms(q, stationary_vector(q, r.k));
    EXPECT_LE(p.max(), 1e-9) << "k = " << r.k;
    EXPECT_LE(p.min(), p.max());
  }
}

TEST(Smilansky, FactorizationAndConjugacy) {
  const QuantumGraphParams q(star_graph(3), {0.5, 1.0, 1.5}, std::vector<VertexStrength>(4, VertexStrength::finite(0.7)),
                             {0.3, -0.2, 0.1});
  for (double k : {0.4, 1.1, 3.3}) {
    const SmilanskyFactorization f = smilansky_factorization(q, k);
    EXPECT_LE(f.st_residual, 1e-12);
    EXPECT_LE(f.conjugacy_residual, 1e-12);
    EXPECT_GT(f.ts_residual, 1e-3);
    EXPECT_LE(unitarity_residual(f.t_matrix), 1e-12);
    EXPECT_LE(unitarity_residual(f.s_matrix), 1e-12);
  }
}

}  // namespace
}  // namespace qgwalk
