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

// Spectral mapping for the Szegedy walk: eigenvalues and eigenvectors of the
// A-type flip-flop walk with Szegedy coins, lifted from the real symmetric
// matrix J, and a direct-diagonalization oracle to compare against.

#include <vector>

#include "qgwalk/coins.hpp"
#include "qgwalk/operators.hpp"

namespace qgwalk {

/// (J)_{ij} = sqrt(p_{ij} p_{ji}) on edges, 0 elsewhere. Vertex i is row i-1.
RealMatrix j_matrix(const TransitionMatrix& p);

/// One eigenvalue e^{sign * i theta} lifted from nu = cos(theta) among the eigenvalues of J.
struct MappedEigenvalue {
  Complex value;
  double nu = 0.0;
  int sign = +1;
  /// (I - value * S) A p_nu.
  ComplexVector vector;
  /// ||U v - value v|| / ||v||; 0 for degenerate lifts.
  double residual = 0.0;
  /// ||v|| < 1e-10; excluded from residual checks.
  bool degenerate = false;
};

struct SpectralResult {
  std::vector<MappedEigenvalue> mapped;
  /// The extra +1 and -1 eigenvalues, |E| - |V| of each, when |E| > |V|.
  std::vector<Complex> leftover;
  std::size_t degenerate_count = 0;
  /// Largest residual over nondegenerate lifts.
  double max_residual = 0.0;

  /// mapped values followed by leftover values; size 2|E|.
  std::vector<Complex> predicted() const;
};

/// Predicted spectrum of U = S_ff C[szegedy_coins(p)] by the case split on
/// |E| versus |V|:
///   tree:        e^{i theta} for every nu, e^{-i theta} only for nu != +-1;
///   |E| = |V|:   e^{+-i theta} for every nu;
///   otherwise:   e^{+-i theta} for every nu plus |E| - |V| copies of +1 and -1.
SpectralResult szegedy_spectrum(const TransitionMatrix& p);

/// The A-type flip-flop walk with szegedy_coins(p).
EvolutionOperator szegedy_walk(const TransitionMatrix& p);

/// Eigenvalues by dense diagonalization. Throws NumericalError if the solver
/// fails or some modulus deviates from 1 by more than 1e-10.
std::vector<Complex> direct_spectrum(const EvolutionOperator& u);

struct SpectrumMatch {
  double max_mismatch = 0.0;   ///< largest angular distance over matched pairs
  std::size_t unmatched = 0;   ///< pairs whose angular distance exceeds tol
  double tol = 0.0;
  bool passed() const noexcept { return unmatched == 0 && max_mismatch <= tol; }
};

/// |arg(a conj(b))| in [0, pi].
double angular_distance(Complex a, Complex b);

/// Sorts both multisets by phase, then greedily pairs each predicted value
/// with the angularly closest unused direct value. Throws ValidationError if
/// the sizes differ.
SpectrumMatch compare_spectra(const std::vector<Complex>& predicted, const std::vector<Complex>& direct,
                              double tol);

}  // namespace qgwalk
