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

// JSON run configuration for the qgwalk tool. Every section is parsed and
// validated into library objects up front; unknown keys are rejected.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qgwalk/coins.hpp"
#include "qgwalk/dynamics.hpp"
#include "qgwalk/graph.hpp"
#include "qgwalk/operators.hpp"

namespace qgwalk::cli {

/// Dense operators are 2|E| x 2|E|; larger graphs are rejected.
inline constexpr std::size_t kMaxArcs = 2000;

struct WalkConfig {
  WalkKind kind = WalkKind::A;
  Partition partition;
  CoinSet coins;
};

struct EvolveConfig {
  int steps = 0;
  WalkState initial;
};

struct ScanConfig {
  double k_min = 0.0;
  double k_max = 0.0;
  double points_per_unit = 2000.0;
  double refine_tol = 1e-10;
};

struct EigenfunctionConfig {
  std::optional<double> k;
  std::optional<std::filesystem::path> roots_file;
  int root_index = 0;
  int samples = 33;
};

struct VerifyConfig {
  int dual_steps = 4;
};

struct PartitionsConfig {
  std::uint64_t cap = kDefaultPartitionCap;
  bool enumerate = true;
};

struct RunConfig {
  std::optional<Graph> graph;
  std::optional<WalkConfig> walk;
  std::optional<TransitionMatrix> transition;
  std::optional<QuantumGraphParams> quantum_graph;
  std::optional<EvolveConfig> evolve;
  std::optional<ScanConfig> scan;
  std::optional<EigenfunctionConfig> eigenfunction;
  VerifyConfig verify;
  PartitionsConfig partitions;
};

/// "(i,j)" -> Arc. Throws ValidationError naming `field` on bad syntax.
Arc parse_arc_key(const std::string& key, const std::string& field);

/// Builds a RunConfig. `seed` drives random partitions and coins; relative
/// paths resolve against `base_dir`. Throws ValidationError naming the
/// offending field.
RunConfig parse_config(const nlohmann::json& doc, std::uint64_t seed,
                       const std::filesystem::path& base_dir = {});

RunConfig load_config(const std::filesystem::path& path, std::uint64_t seed);

}  // namespace qgwalk::cli
