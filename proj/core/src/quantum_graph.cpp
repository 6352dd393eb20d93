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

#include "qgwalk/quantum_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include <Eigen/SVD>

#include "qgwalk/error.hpp"

namespace qgwalk {

namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kGolden = 0.6180339887498949;

ComplexMatrix identity_minus(const ComplexMatrix& u) {
  return ComplexMatrix::Identity(u.rows(), u.cols()) - u;
}

unsigned resolve_threads(unsigned requested, std::size_t work) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, work)));
}

double golden_minimize(const QuantumGraphParams& q, double lo, double hi, double tol) {
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = stationarity_indicator(q, x1);
  double f2 = stationarity_indicator(q, x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = stationarity_indicator(q, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = stationarity_indicator(q, x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

}  // namespace

EvolutionOperator build_walk(const QuantumGraphParams& q, double k) {
  return evolution(WalkKind::A, flip_flop_partition(q.graph()), quantum_graph_coins(q, k));
}

double stationarity_indicator(const QuantumGraphParams& q, double k) {
  return smallest_singular_value(identity_minus(build_walk(q, k).matrix));
}

SecularScan scan_roots(const QuantumGraphParams& q, double k_min, double k_max, const ScanOptions& opts) {
  if (!(k_min > 0.0) || !(k_max > k_min) || !std::isfinite(k_max)) {
    throw ValidationError("scan range must satisfy 0 < k_min < k_max");
  }
  if (!q.all_lengths_positive()) throw ValidationError("every edge length must be positive for scanning");
  if (!(opts.points_per_unit > 0.0)) throw ValidationError("points_per_unit must be positive");

  const auto n = static_cast<std::size_t>(std::ceil((k_max - k_min) * opts.points_per_unit)) + 1;
  SecularScan scan;
  scan.k.resize(n);
  scan.indicator.resize(n);
  scan.determinant.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    scan.k[i] = k_min + (k_max - k_min) * static_cast<double>(i) / static_cast<double>(n - 1);
  }

  const AlphaWeights uniform = AlphaWeights::uniform(q.graph());
  const unsigned workers = resolve_threads(opts.threads, n);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        scan.indicator[i] = stationarity_indicator(q, scan.k[i]);
        scan.determinant[i] = secular_regularized(q, uniform, scan.k[i]);
      }
    });
  }
  for (auto& t : pool) t.join();

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double f = scan.indicator[i];
    if (f > opts.bracket_threshold || f > scan.indicator[i - 1] || f > scan.indicator[i + 1]) continue;
    const double k = golden_minimize(q, scan.k[i - 1], scan.k[i + 1], opts.refine_tol);
    if (!scan.roots.empty() && std::abs(scan.roots.back().k - k) < 1e-8) continue;
    const ComplexMatrix m = identity_minus(build_walk(q, k).matrix);
    const Eigen::VectorXd sv = Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
    const double residual = sv(sv.size() - 1);
    if (residual > opts.root_tol) continue;
    Root r{k, 0, residual};
    for (Eigen::Index j = 0; j < sv.size(); ++j) {
      if (sv(j) < 10.0 * opts.root_tol) ++r.multiplicity;
    }
    scan.roots.push_back(r);
  }
  return scan;
}

StationaryVector least_singular_vector(const QuantumGraphParams& q, double k) {
  const ComplexMatrix u = build_walk(q, k).matrix;
  Eigen::JacobiSVD<ComplexMatrix> svd(identity_minus(u), Eigen::ComputeFullV);
  StationaryVector v;
  v.k = k;
  v.a_star = fix_global_phase(svd.matrixV().col(u.cols() - 1));
  v.residual = (u * v.a_star - v.a_star).norm();
  return v;
}

StationaryVector stationary_vector(const QuantumGraphParams& q, double k, double root_tol) {
  const double indicator = stationarity_indicator(q, k);
  if (indicator > root_tol) {
    throw ValidationError("k = " + std::to_string(k) + " is not a root: indicator " + std::to_string(indicator));
  }
  return least_singular_vector(q, k);
}

ComplexVector b_from_a(const StationaryVector& v, const QuantumGraphParams& q) {
  const ArcSpace arcs(q.graph());
  if (v.a_star.size() != static_cast<Eigen::Index>(arcs.size())) {
    throw ValidationError("stationary vector does not match the graph");
  }
  ComplexVector b(v.a_star.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc a = arcs.arc(i);
    b(static_cast<Eigen::Index>(i)) = v.a_star(static_cast<Eigen::Index>(arcs.reverse_index(i))) *
                                      std::exp(-kI * (q.length(a) * (v.k - q.arc_potential(a))));
  }
  return b;
}

ComplexVector a_from_b(const ComplexVector& b, const QuantumGraphParams& q, double k) {
  const ArcSpace arcs(q.graph());
  if (b.size() != static_cast<Eigen::Index>(arcs.size())) throw ValidationError("b does not match the graph");
  ComplexVector a(b.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc arc = arcs.arc(i);
    a(static_cast<Eigen::Index>(i)) = b(static_cast<Eigen::Index>(arcs.reverse_index(i))) *
                                      std::exp(kI * (q.length(arc) * (k + q.arc_potential(arc))));
  }
  return a;
}

EigenfunctionSample wavefunction(const StationaryVector& v, const QuantumGraphParams& q, int samples) {
  if (samples < 2) throw ValidationError("need at least 2 samples per arc");
  const ArcSpace arcs(q.graph());
  const ComplexMatrix s = shift_operator(flip_flop_partition(arcs));
  const auto n = static_cast<Eigen::Index>(arcs.size());

  EigenfunctionSample out;
  out.k = v.k;
  out.a = v.a_star;
  out.b = b_from_a(v, q);
  for (std::size_t i = 0; i < arcs.size(); ++i) out.arcs.push_back({arcs.arc(i), {}, {}});

  const ComplexVector sa = s * v.a_star;
  for (int step = 0; step < samples; ++step) {
    ComplexVector d1(n), d2(n);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const Arc arc = arcs.arc(i);
      const Arc back = arc.reversed();
      const double len = q.length(arc);
      const double x = len * step / (samples - 1);
      const Complex direct =
          v.a_star(static_cast<Eigen::Index>(i)) * std::exp(-kI * (v.k + q.arc_potential(arc)) * x) +
          v.a_star(static_cast<Eigen::Index>(arcs.reverse_index(i))) *
              std::exp(-kI * (v.k + q.arc_potential(back)) * (len - x));
      out.arcs[i].x.push_back(x);
      out.arcs[i].psi.push_back(direct);
      d1(static_cast<Eigen::Index>(i)) = std::exp(-kI * (v.k + q.arc_potential(arc)) * x);
      d2(static_cast<Eigen::Index>(i)) = std::exp(-kI * (v.k - q.arc_potential(arc)) * (len - x));
    }
    const ComplexVector matrix_form = d1.cwiseProduct(v.a_star) + d2.cwiseProduct(sa);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      out.matrix_form_residual = std::max(
          out.matrix_form_residual,
          std::abs(matrix_form(static_cast<Eigen::Index>(i)) - out.arcs[i].psi[static_cast<std::size_t>(step)]));
    }
  }
  for (Vertex u = 1; u <= q.graph().vertex_count(); ++u) {
    out.vertex_values.push_back(out.arcs[arcs.block_offset(u)].psi.front());
  }
  return out;
}

BoundaryReport verify_boundary_conditions(const EigenfunctionSample& e, const QuantumGraphParams& q) {
  const ArcSpace arcs(q.graph());
  const Graph& g = q.graph();
  if (e.arcs.size() != arcs.size()) throw ValidationError("eigenfunction sample does not match the graph");

  BoundaryReport report;
  auto add = [&](Vertex u, const char* cond, double r) {
    report.rows.push_back({u, cond, r});
    report.max_residual = std::max(report.max_residual, r);
  };
  for (Vertex u = 1; u <= g.vertex_count(); ++u) {
    const std::size_t off = arcs.block_offset(u);
    const int d = g.degree(u);

    double sym = 0.0;
    for (int l = 0; l < d; ++l) {
      const auto& fwd = e.arcs[off + static_cast<std::size_t>(l)];
      const auto& bwd = e.arcs[arcs.reverse_index(off + static_cast<std::size_t>(l))];
      for (std::size_t s = 0; s < fwd.psi.size(); ++s) {
        sym = std::max(sym, std::abs(fwd.psi[s] - bwd.psi[fwd.psi.size() - 1 - s]));
      }
    }
    add(u, "I", sym);

    double spread = 0.0;
    const Complex phi = e.arcs[off].psi.front();
    for (int l = 1; l < d; ++l) spread = std::max(spread, std::abs(e.arcs[off + static_cast<std::size_t>(l)].psi.front() - phi));
    add(u, "II", spread);

    if (q.strength(u).is_dirichlet()) {
      double value = 0.0;
      for (int l = 0; l < d; ++l) value = std::max(value, std::abs(e.arcs[off + static_cast<std::size_t>(l)].psi.front()));
      add(u, "dirichlet", value);
      continue;
    }
    // (-i d/dx + A) Psi at x = 0, from the plane-wave coefficients.
    Complex flux = 0.0;
    for (int l = 0; l < d; ++l) {
      const std::size_t idx = off + static_cast<std::size_t>(l);
      const Arc arc = arcs.arc(idx);
      const double a_fwd = q.arc_potential(arc);
      const double a_bwd = q.arc_potential(arc.reversed());
      const Complex amp_a = e.a(static_cast<Eigen::Index>(idx));
      const Complex amp_b = e.b(static_cast<Eigen::Index>(idx));
      const Complex derivative = -kI * (e.k + a_fwd) * amp_a + kI * (e.k + a_bwd) * amp_b;
      flux += -kI * derivative + a_fwd * (amp_a + amp_b);
    }
    add(u, "III", std::abs(flux + kI * q.strength(u).value() * phi));
  }
  return report;
}

Complex secular_reduced(const QuantumGraphParams& q, const AlphaWeights& w, double k, Complex t) {
  const Graph& g = q.graph();
  const ArcSpace arcs(g);
  const int nv = g.vertex_count();

  std::vector<Complex> delta(g.edge_count());
  Complex product = 1.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    delta[e] = 1.0 - t * t * std::exp(2.0 * kI * k * q.length(e));
    if (std::abs(delta[e]) < 1e-10) {
      throw PoleError("secular determinant pole at edge {" + std::to_string(g.edges()[e].lo) + "," +
                      std::to_string(g.edges()[e].hi) + "}");
    }
    product *= delta[e];
  }

  std::vector<Complex> factor(static_cast<std::size_t>(nv));
  for (Vertex j = 1; j <= nv; ++j) {
    factor[static_cast<std::size_t>(j - 1)] = 1.0 + std::exp(-kI * rho(q.strength(j), g.degree(j), k));
  }

  ComplexMatrix tm = ComplexMatrix::Zero(nv, nv);
  ComplexMatrix dm = ComplexMatrix::Zero(nv, nv);
  for (std::size_t idx = 0; idx < arcs.size(); ++idx) {
    const Arc arc = arcs.arc(idx);
    const Vertex i = arc.origin;
    const Vertex j = arc.terminus;
    const std::size_t e = g.edge_index(i, j);
    const double len = q.length(e);
    const Complex alpha_ij = w.at(i)(arcs.local_index(arc));
    const Complex alpha_ji = w.at(j)(arcs.local_index(arc.reversed()));
    tm(i - 1, j - 1) = std::exp(kI * len * (k + q.arc_potential(arc))) * factor[static_cast<std::size_t>(j - 1)] *
                       alpha_ji * std::conj(alpha_ij) / delta[e];
    dm(i - 1, i - 1) += std::norm(alpha_ij) * factor[static_cast<std::size_t>(i - 1)] *
                        std::exp(2.0 * kI * k * len) / delta[e];
  }
  const ComplexMatrix m = ComplexMatrix::Identity(nv, nv) - t * tm + t * t * dm;
  return m.determinant() * product;
}

Complex secular_direct(const QuantumGraphParams& q, const AlphaWeights& w, double k, Complex t) {
  const ComplexMatrix u =
      evolution(WalkKind::A, flip_flop_partition(q.graph()), generalized_coins(q, w, k)).matrix;
  return (ComplexMatrix::Identity(u.rows(), u.cols()) - t * u).determinant();
}

Complex secular_regularized(const QuantumGraphParams& q, const AlphaWeights& w, double k) {
  double closest = std::numeric_limits<double>::infinity();
  for (double len : q.lengths()) closest = std::min(closest, std::abs(1.0 - std::exp(2.0 * kI * k * len)));
  if (closest >= 1e-3) return secular_reduced(q, w, k, 1.0);
  constexpr double h = 1e-4;
  return 0.5 * (secular_reduced(q, w, k, 1.0 + h) + secular_reduced(q, w, k, 1.0 - h));
}

double StationarityForms::max() const noexcept {
  return std::max({a_type, g_type_adjoint, a_type_adjoint, g_type});
}

double StationarityForms::min() const noexcept {
  return std::min({a_type, g_type_adjoint, a_type_adjoint, g_type});
}

StationarityForms stationarity_forms(const QuantumGraphParams& q, const StationaryVector& v) {
  const Partition ff = flip_flop_partition(q.graph());
  const CoinSet h = quantum_graph_coins(q, v.k);
  const CoinSet h_adj = h.adjoint();
  const ComplexVector& a = v.a_star;
  const ComplexVector b = shift_operator(ff) * a;

  StationarityForms r;
  r.a_type = (evolution(WalkKind::A, ff, h).matrix * a - a).norm();
  r.g_type_adjoint = (evolution(WalkKind::G, ff, h_adj).matrix * a - a).norm();
  r.a_type_adjoint = (evolution(WalkKind::A, ff, h_adj).matrix * b - b).norm();
  r.g_type = (evolution(WalkKind::G, ff, h).matrix * b - b).norm();
  return r;
}

SmilanskyFactorization smilansky_factorization(const QuantumGraphParams& q, double k) {
  const Graph& g = q.graph();
  const ArcSpace arcs(g);
  const Partition ff = flip_flop_partition(arcs);
  const auto n = static_cast<Eigen::Index>(arcs.size());

  ComplexMatrix sigma = ComplexMatrix::Zero(n, n);
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    const int d = g.degree(j);
    const Complex weight = 1.0 + std::exp(-kI * rho(q.strength(j), d, k));
    ComplexMatrix block = ComplexMatrix::Constant(d, d, weight / static_cast<double>(d));
    block.diagonal().array() -= 1.0;
    const auto off = static_cast<Eigen::Index>(arcs.block_offset(j));
    sigma.block(off, off, d, d) = block;
  }
  ComplexVector phases(n);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    phases(static_cast<Eigen::Index>(i)) = arc_phase(q, arcs.arc(i), k);
  }

  SmilanskyFactorization f;
  f.t_matrix = sigma * shift_operator(ff);
  f.s_matrix = phases.asDiagonal();
  const ComplexMatrix ug = evolution(WalkKind::G, ff, quantum_graph_coins(q, k)).matrix;
  const ComplexMatrix s_inv = phases.conjugate().asDiagonal();
  const ComplexMatrix ts = f.t_matrix * f.s_matrix;
  f.st_residual = operator_norm(ug - f.s_matrix * f.t_matrix);
  f.ts_residual = operator_norm(ug - ts);
  f.conjugacy_residual = operator_norm(ts - s_inv * ug * f.s_matrix);
  return f;
}

}  // namespace qgwalk
