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

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qgwalk {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kIdentityTol = 1e-10;

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// ||M^dagger M - I|| in operator norm.
double unitarity_residual(const ComplexMatrix& m);

/// Smallest singular value.
double smallest_singular_value(const ComplexMatrix& m);

ComplexMatrix matrix_power(const ComplexMatrix& m, int n);

/// Eigenvalues of a general complex square matrix. Throws NumericalError if
/// the eigensolver does not converge.
std::vector<Complex> eigenvalues(const ComplexMatrix& m);

/// Haar-like unitary: QR of a complex Gaussian matrix with the phases of
/// diag(R) divided out. Deterministic for a given generator state.
ComplexMatrix random_unitary(int n, std::mt19937_64& rng);

/// Phase-fixed copy of v: the first entry of largest magnitude becomes real
/// and positive.
ComplexVector fix_global_phase(const ComplexVector& v);

}  // namespace qgwalk
