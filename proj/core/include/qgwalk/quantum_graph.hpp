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

// Quantum graphs as walks: the stationary states of the A-type flip-flop walk
// with quantum-graph coins H_j(k) are exactly the eigenfunctions of the metric
// graph at wavenumber k. This module scans for such k, reconstructs the
// eigenfunctions and checks the vertex conditions they must satisfy.

#include <string>
#include <vector>

#include "qgwalk/coins.hpp"
#include "qgwalk/operators.hpp"

namespace qgwalk {

/// U(k) = U^(A)_ff[H_j(k)]. Throws ValidationError for k <= 0.
EvolutionOperator build_walk(const QuantumGraphParams& q, double k);

/// Smallest singular value of I - U(k).
double stationarity_indicator(const QuantumGraphParams& q, double k);

struct ScanOptions {
  double points_per_unit = 2000.0;
  double refine_tol = 1e-10;    ///< golden-section bracket width in k
  double root_tol = 1e-9;       ///< accept a refined minimum at or below this
  double bracket_threshold = 0.1;
  unsigned threads = 0;         ///< 0: hardware concurrency
};

struct Root {
  double k = 0.0;
  int multiplicity = 0;         ///< singular values of I - U below 10 * root_tol
  double residual = 0.0;        ///< indicator at k
};

struct SecularScan {
  std::vector<double> k;
  std::vector<double> indicator;
  /// Regularized reduced determinant at t = 1 with uniform alpha.
  std::vector<Complex> determinant;
  std::vector<Root> roots;
};

/// Grid scan of (k_min, k_max) plus golden-section refinement of every local
/// minimum below the bracket threshold. Throws ValidationError for an empty
/// range, k_min <= 0, or an edge of length 0.
SecularScan scan_roots(const QuantumGraphParams& q, double k_min, double k_max, const ScanOptions& opts = {});

struct StationaryVector {
  double k = 0.0;
  ComplexVector a_star;     ///< unit norm, largest entry real positive
  double residual = 0.0;    ///< ||U(k) a - a||
};

/// Right singular vector of the smallest singular value of I - U(k), with no
/// check that k is a root.
StationaryVector least_singular_vector(const QuantumGraphParams& q, double k);

/// least_singular_vector, but throws ValidationError if the indicator exceeds
/// root_tol.
StationaryVector stationary_vector(const QuantumGraphParams& q, double k, double root_tol = 1e-9);

/// b_(i,j) = a_(j,i) e^{-i L_ij (k - A_(i,j))}.
ComplexVector b_from_a(const StationaryVector& v, const QuantumGraphParams& q);
/// a_(i,j) = b_(j,i) e^{i L_ij (k + A_(i,j))}.
ComplexVector a_from_b(const ComplexVector& b, const QuantumGraphParams& q, double k);

struct ArcSamples {
  Arc arc;
  std::vector<double> x;
  /// Psi_(i,j)(x) = a_(ij) e^{-i(k + A_(ij))x} + a_(ji) e^{-i(k + A_(ji))(L - x)}.
  std::vector<Complex> psi;
};

struct EigenfunctionSample {
  double k = 0.0;
  ComplexVector a;
  ComplexVector b;
  std::vector<ArcSamples> arcs;          ///< ArcSpace order
  std::vector<Complex> vertex_values;    ///< phi_i = Psi_(i,j)(0), j the first neighbor
  /// max pointwise |direct - (D1(x) + D2(x) S) a|.
  double matrix_form_residual = 0.0;
};

/// Samples Psi on every arc at `samples` equispaced points including both
/// endpoints. Throws ValidationError for samples < 2.
EigenfunctionSample wavefunction(const StationaryVector& v, const QuantumGraphParams& q, int samples = 33);

struct ConditionResidual {
  Vertex vertex = 0;
  std::string condition;   ///< "I", "II", "III" or "dirichlet"
  double residual = 0.0;
};

struct BoundaryReport {
  std::vector<ConditionResidual> rows;
  double max_residual = 0.0;
  bool passed(double tol = 1e-8) const noexcept { return max_residual <= tol; }
};

/// Per vertex: I (symmetry Psi_(ij)(x) = Psi_(ji)(L - x) over arcs leaving
/// it), II (spread of Psi_(ij)(0) over j), and III, the flux defect
/// |sum_j (-i d/dx + A_(ij)) Psi_(ij)(0) + i lambda_i phi_i| with the
/// derivative taken analytically. Dirichlet vertices report max_j |Psi_(ij)(0)|
/// in place of III.
BoundaryReport verify_boundary_conditions(const EigenfunctionSample& e, const QuantumGraphParams& q);

/// det(I_V - t T(t) + t^2 D(t)) prod_e (1 - t^2 e^{2ikL_e}) for the walk with
/// generalized_coins(q, w, k). Throws PoleError if some |1 - t^2 e^{2ikL_e}|
/// is below 1e-10.
Complex secular_reduced(const QuantumGraphParams& q, const AlphaWeights& w, double k, Complex t);

/// det(I - t U) with U the A-type flip-flop walk with generalized_coins.
Complex secular_direct(const QuantumGraphParams& q, const AlphaWeights& w, double k, Complex t);

/// secular_reduced at t = 1, replaced by the mean over t = 1 +- 1e-4 when
/// some e^{2ikL_e} lies within 1e-3 of 1.
Complex secular_regularized(const QuantumGraphParams& q, const AlphaWeights& w, double k);

struct StationarityForms {
  double a_type = 0.0;           ///< ||U^(A)_ff[H] a - a||
  double g_type_adjoint = 0.0;   ///< ||U^(G)_ff[H^dagger] a - a||
  double a_type_adjoint = 0.0;   ///< ||U^(A)_ff[H^dagger] b - b||, b = S_ff a
  double g_type = 0.0;           ///< ||U^(G)_ff[H] b - b||
  double max() const noexcept;
  double min() const noexcept;
};

StationarityForms stationarity_forms(const QuantumGraphParams& q, const StationaryVector& v);

struct SmilanskyFactorization {
  ComplexMatrix t_matrix;   ///< C[sigma] S_ff, sigma_j = 2/(d_j + i lambda_j/k) J - I
  ComplexMatrix s_matrix;   ///< diagonal of arc phases e^{i L_ij (k - A_(i,j))}
  double st_residual = 0.0;           ///< ||U^(G)_ff - S T||
  double ts_residual = 0.0;           ///< ||U^(G)_ff - T S||
  double conjugacy_residual = 0.0;    ///< ||T S - S^{-1} U^(G)_ff S||
};

SmilanskyFactorization smilansky_factorization(const QuantumGraphParams& q, double k);

}  // namespace qgwalk
