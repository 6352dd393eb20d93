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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "config.hpp"

namespace qgwalk::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInvalidInput = 2 };

struct CommandContext {
  std::filesystem::path out_dir = ".";
  std::uint64_t seed = 1;
  std::optional<double> tol;
  unsigned threads = 0;
  std::ostream* log = nullptr;   ///< human-readable summary; may be null
};

/// distribution.csv: time,vertex,probability for t = 0..steps.
int cmd_evolve(const RunConfig& cfg, const CommandContext& ctx);

/// verify.csv: identity,residual,passed for dual, inverse, change-partition,
/// flip-flop-conversion, a-to-a and severini. Tolerance defaults to 1e-10.
int cmd_verify(const RunConfig& cfg, const CommandContext& ctx);

/// spectrum.csv: source,real,imag,nu with sources mapped, leftover, direct.
/// Tolerance defaults to 1e-8.
int cmd_szegedy(const RunConfig& cfg, const CommandContext& ctx);

/// scan.csv: k,indicator,det_real,det_imag and roots.csv: k,multiplicity,residual.
/// Tolerance (root acceptance) defaults to 1e-9.
int cmd_qg_scan(const RunConfig& cfg, const CommandContext& ctx);

/// eigenfunction.csv: arc_origin,arc_terminus,x,re,im; boundary.csv:
/// vertex,cond,residual; stationarity.csv: relation,residual. Tolerance on
/// the boundary residuals defaults to 1e-8.
int cmd_qg_eigenfunction(const RunConfig& cfg, const CommandContext& ctx);

/// partition_count.csv: vertices,edges,count and, when enumerating,
/// partitions.csv: index,cycles,successors (successor per arc in arc order).
int cmd_partitions(const RunConfig& cfg, const CommandContext& ctx);

}  // namespace qgwalk::cli
