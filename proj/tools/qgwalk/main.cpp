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

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qgwalk/error.hpp"

namespace {

unsigned threads_from_env() {
  const char* raw = std::getenv("QGWALK_THREADS");
  if (!raw || !*raw) return 0;
  try {
    const long n = std::stol(raw);
    return n > 0 ? static_cast<unsigned>(n) : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qgwalk::cli;

  CLI::App app{"Coined quantum walks, Szegedy spectra and quantum graph solver"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  double tol = 0.0;

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&, const CommandContext&);
  };
  const Sub subs[] = {
      {"evolve", "Evolve a walk and write per-vertex finding probabilities", cmd_evolve},
      {"verify", "Check the operator identities for a walk", cmd_verify},
      {"szegedy", "Compare the mapped Szegedy spectrum with direct diagonalization", cmd_szegedy},
      {"qg-scan", "Scan k for stationary states of the quantum graph walk", cmd_qg_scan},
      {"qg-eigenfunction", "Reconstruct and check an eigenfunction at a root", cmd_qg_eigenfunction},
      {"partitions", "Count and enumerate the partitions of the line digraph", cmd_partitions},
  };
  CLI::Option* tol_opts[std::size(subs)] = {};
  for (std::size_t i = 0; i < std::size(subs); ++i) {
    const Sub& s = subs[i];
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "Output directory")->capture_default_str();
    sub->add_option("--seed", seed, "Seed for random partitions and coins")->capture_default_str();
    tol_opts[i] = sub->add_option("--tol", tol, "Override the command's pass tolerance");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  std::size_t chosen = 0;
  while (!app.got_subcommand(subs[chosen].name)) ++chosen;
  try {
    const RunConfig cfg = load_config(config_path, seed);
    CommandContext ctx;
    ctx.out_dir = out_dir;
    ctx.seed = seed;
    if (tol_opts[chosen]->count() > 0) {
      if (!(tol > 0.0)) throw qgwalk::ValidationError("--tol must be positive");
      ctx.tol = tol;
    }
    ctx.threads = threads_from_env();
    ctx.log = &std::cout;
    return subs[chosen].run(cfg, ctx);
  } catch (const qgwalk::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}
