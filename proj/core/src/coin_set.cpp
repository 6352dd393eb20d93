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

#include "qgwalk/coin_set.hpp"

#include <string>

#include "qgwalk/error.hpp"

namespace qgwalk {

CoinSet::CoinSet(const Graph& g, std::vector<ComplexMatrix> coins, double tol)
    : coins_(std::move(coins)) {
  if (coins_.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw ValidationError("coin set has " + std::to_string(coins_.size()) + " coins for " +
                          std::to_string(g.vertex_count()) + " vertices");
  }
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    const ComplexMatrix& h = at(j);
    const int d = g.degree(j);
    if (h.rows() != d || h.cols() != d) {
      throw ValidationError("coin at vertex " + std::to_string(j) + " is " + std::to_string(h.rows()) +
                            "x" + std::to_string(h.cols()) + ", degree is " + std::to_string(d));
    }
    if (!h.allFinite()) {
      throw ValidationError("coin at vertex " + std::to_string(j) + " has non-finite entries");
    }
    double defect = unitarity_residual(h);
    if (defect > tol) {
      throw ValidationError("coin at vertex " + std::to_string(j) + " is not unitary (residual " +
                            std::to_string(defect) + ")");
    }
  }
}

CoinSet CoinSet::identity(const Graph& g) {
  std::vector<ComplexMatrix> coins;
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    coins.push_back(ComplexMatrix::Identity(g.degree(j), g.degree(j)));
  }
  return CoinSet(g, std::move(coins));
}

CoinSet CoinSet::random(const Graph& g, std::mt19937_64& rng) {
  std::vector<ComplexMatrix> coins;
  for (Vertex j = 1; j <= g.vertex_count(); ++j) coins.push_back(random_unitary(g.degree(j), rng));
  return CoinSet(g, std::move(coins));
}

CoinSet CoinSet::adjoint() const {
  std::vector<ComplexMatrix> out;
  out.reserve(coins_.size());
  for (const auto& h : coins_) out.push_back(h.adjoint());
  return CoinSet(Unchecked{}, std::move(out));
}

bool CoinSet::self_adjoint(double tol) const {
  for (const auto& h : coins_) {
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace qgwalk
