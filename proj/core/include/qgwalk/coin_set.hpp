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

#include <vector>

#include "qgwalk/graph.hpp"
#include "qgwalk/linalg.hpp"

namespace qgwalk {

/// Local coins {H_j}: one d_j x d_j matrix per vertex, rows and columns
/// indexed by neighbor_order(j). Entry (m, l) is <e_m^(j)|H_j|e_l^(j)>.
class CoinSet {
 public:
  /// Validates dimensions and unitarity (operator norm of H^dagger H - I
  /// within tol). Throws ValidationError naming the offending vertex.
  CoinSet(const Graph& g, std::vector<ComplexMatrix> coins, double tol = kConstructionTol);

  static CoinSet identity(const Graph& g);
  static CoinSet random(const Graph& g, std::mt19937_64& rng);

  const ComplexMatrix& at(Vertex j) const { return coins_.at(static_cast<std::size_t>(j - 1)); }
  std::size_t size() const noexcept { return coins_.size(); }
  const std::vector<ComplexMatrix>& matrices() const noexcept { return coins_; }

  CoinSet adjoint() const;
  /// Every H_j self-adjoint within tol.
  bool self_adjoint(double tol = kConstructionTol) const;

 private:
  struct Unchecked {};
  CoinSet(Unchecked, std::vector<ComplexMatrix> coins) : coins_(std::move(coins)) {}

  std::vector<ComplexMatrix> coins_;
};

}  // namespace qgwalk
