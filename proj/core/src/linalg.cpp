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

#include "qgwalk/linalg.hpp"

#include <cmath>

#include "qgwalk/error.hpp"

namespace qgwalk {

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double unitarity_residual(const ComplexMatrix& m) {
  ComplexMatrix defect = m.adjoint() * m;
  defect.diagonal().array() -= Complex(1.0, 0.0);
  return operator_norm(defect);
}

double smallest_singular_value(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  return s(s.size() - 1);
}

ComplexMatrix matrix_power(const ComplexMatrix& m, int n) {
  if (n < 0) throw ValidationError("matrix_power: negative exponent");
  ComplexMatrix result = ComplexMatrix::Identity(m.rows(), m.cols());
  ComplexMatrix base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::vector<Complex> eigenvalues(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("complex eigensolver failed to converge");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix z(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      double re = gauss(rng);
      double im = gauss(rng);
      z(r, c) = Complex(re, im);
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    double mag = std::abs(r(k, k));
    Complex phase = mag > 0 ? r(k, k) / mag : Complex(1.0, 0.0);
    q.col(k) *= phase;
  }
  return q;
}

ComplexVector fix_global_phase(const ComplexVector& v) {
  if (v.size() == 0) return v;
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double mag = std::abs(v(i));
    // strict comparison keeps the first of (numerically) tied maxima
    if (mag > best_mag * (1.0 + 1e-12) + 1e-300) {
      best = i;
      best_mag = mag;
    }
  }
  if (best_mag <= 0.0) return v;
  Complex phase = std::conj(v(best)) / best_mag;
  return v * phase;
}

}  // namespace qgwalk
