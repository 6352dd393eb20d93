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

#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "csv.hpp"
#include "qgwalk/dynamics.hpp"
#include "qgwalk/error.hpp"
#include "qgwalk/quantum_graph.hpp"
#include "qgwalk/szegedy.hpp"

namespace qgwalk::cli {

namespace {

template <typename T>
const T& require(const std::optional<T>& section, const char* name) {
  if (!section) throw ValidationError(std::string("config section '") + name + "' is required");
  return *section;
}

void emit(const CommandContext& ctx, const CsvTable& table, const char* file) {
  std::filesystem::create_directories(ctx.out_dir);
  write_atomic(ctx.out_dir / file, table.str());
}

void say(const CommandContext& ctx, const std::string& line) {
  if (ctx.log) *ctx.log << line << '\n';
}

double root_from_file(const std::filesystem::path& path, int index) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open roots file " + path.string());
  std::string line;
  std::getline(in, line);
  if (line.rfind("k,", 0) != 0) throw ValidationError("roots file " + path.string() + " has no k column");
  for (int row = 0; std::getline(in, line); ++row) {
    if (row == index) {
      try {
        return std::stod(line.substr(0, line.find(',')));
      } catch (const std::exception&) {
        throw ValidationError("malformed row in roots file " + path.string());
      }
    }
  }
  throw ValidationError("roots file " + path.string() + " has no root with index " + std::to_string(index));
}

}  // namespace

int cmd_evolve(const RunConfig& cfg, const CommandContext& ctx) {
  const WalkConfig& walk = require(cfg.walk, "walk");
  const EvolveConfig& ev = require(cfg.evolve, "evolve");
  const EvolutionOperator u = evolution(walk.kind, walk.partition, walk.coins);
  const ArcSpace& arcs = u.arc_space();

  CsvTable table({"time", "vertex", "probability"});
  WalkState state = ev.initial;
  for (int t = 0; t <= ev.steps; ++t) {
    const Distribution d = finding_probability(arcs, state);
    for (Vertex v = 1; v <= arcs.graph().vertex_count(); ++v) {
      table.add_row({std::to_string(t), std::to_string(v), format_number(d.at(v))});
    }
    state = evolve(u, state, 1);
  }
  emit(ctx, table, "distribution.csv");
  say(ctx, "wrote " + std::to_string(table.row_count()) + " rows to distribution.csv");
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, const CommandContext& ctx) {
  const Graph& g = require(cfg.graph, "graph");
  const ArcSpace arcs(g);
  std::mt19937_64 rng(ctx.seed);
  const Partition p = cfg.walk ? cfg.walk->partition : flip_flop_partition(arcs);
  const CoinSet coins = cfg.walk ? cfg.walk->coins : CoinSet::random(g, rng);
  const Partition q = random_partition(arcs, rng);
  const double tol = ctx.tol.value_or(kIdentityTol);

  const InverseReport inv = verify_inverse(arcs, coins);
  const SeveriniReport sev = verify_severini(p, coins);
  struct Row {
    const char* name;
    double residual;
    bool passed;
  };
  const double dual = verify_dual(p, coins, cfg.verify.dual_steps);
  const double change = verify_change_partition(p, q, coins);
  const double conversion = verify_flip_flop_conversion(p, coins);
  const double a_to_a = verify_a_to_a(p, coins);
  const double inverse = std::max(inv.residual, inv.self_adjoint_residual);
  const Row rows[] = {
      {"dual", dual, dual <= tol},
      {"inverse", inverse, inverse <= tol},
      {"change-partition", change, change <= tol},
      {"flip-flop-conversion", conversion, conversion <= tol},
      {"a-to-a", a_to_a, a_to_a <= tol},
      {"severini", static_cast<double>(sev.g_violations + sev.a_violations), sev.passed()},
  };

  CsvTable table({"identity", "residual", "passed"});
  bool all = true;
  for (const Row& r : rows) {
    table.add_row({r.name, format_number(r.residual), r.passed ? "1" : "0"});
    say(ctx, std::string(r.passed ? "PASS " : "FAIL ") + r.name + " " + format_number(r.residual));
    all = all && r.passed;
  }
  emit(ctx, table, "verify.csv");
  return all ? kSuccess : kVerificationFailed;
}

int cmd_szegedy(const RunConfig& cfg, const CommandContext& ctx) {
  const Graph& g = require(cfg.graph, "graph");
  const TransitionMatrix p = cfg.transition ? *cfg.transition : TransitionMatrix::uniform(ArcSpace(g));
  const double tol = ctx.tol.value_or(1e-8);

  const SpectralResult predicted = szegedy_spectrum(p);
  const std::vector<Complex> direct = direct_spectrum(szegedy_walk(p));
  const SpectrumMatch match = compare_spectra(predicted.predicted(), direct, tol);

  CsvTable table({"source", "real", "imag", "nu"});
  for (const auto& m : predicted.mapped) {
    table.add_row({"mapped", format_number(m.value.real()), format_number(m.value.imag()), format_number(m.nu)});
  }
  for (const Complex& z : predicted.leftover) {
    table.add_row({"leftover", format_number(z.real()), format_number(z.imag()), ""});
  }
  for (const Complex& z : direct) table.add_row({"direct", format_number(z.real()), format_number(z.imag()), ""});
  emit(ctx, table, "spectrum.csv");

  const bool passed = match.passed() && predicted.max_residual <= tol;
  say(ctx, "max angular mismatch " + format_number(match.max_mismatch) + ", unmatched " +
               std::to_string(match.unmatched) + ", leftover " + std::to_string(predicted.leftover.size()) +
               ", degenerate lifts " + std::to_string(predicted.degenerate_count) + ", max lift residual " +
               format_number(predicted.max_residual));
  return passed ? kSuccess : kVerificationFailed;
}

int cmd_qg_scan(const RunConfig& cfg, const CommandContext& ctx) {
  const QuantumGraphParams& q = require(cfg.quantum_graph, "quantum_graph");
  const ScanConfig& sc = require(cfg.scan, "scan");
  ScanOptions opts;
  opts.points_per_unit = sc.points_per_unit;
  opts.refine_tol = sc.refine_tol;
  opts.root_tol = ctx.tol.value_or(opts.root_tol);
  opts.threads = ctx.threads;
  const SecularScan scan = scan_roots(q, sc.k_min, sc.k_max, opts);

  CsvTable grid({"k", "indicator", "det_real", "det_imag"});
  for (std::size_t i = 0; i < scan.k.size(); ++i) {
    grid.add_row({format_number(scan.k[i]), format_number(scan.indicator[i]),
                  format_number(scan.determinant[i].real()), format_number(scan.determinant[i].imag())});
  }
  CsvTable roots({"k", "multiplicity", "residual"});
  for (const Root& r : scan.roots) {
    roots.add_row({format_number(r.k), std::to_string(r.multiplicity), format_number(r.residual)});
  }
  emit(ctx, grid, "scan.csv");
  emit(ctx, roots, "roots.csv");
  say(ctx, "found " + std::to_string(scan.roots.size()) + " roots in (" + format_number(sc.k_min) + ", " +
               format_number(sc.k_max) + ")");
  return kSuccess;
}

int cmd_qg_eigenfunction(const RunConfig& cfg, const CommandContext& ctx) {
  const QuantumGraphParams& q = require(cfg.quantum_graph, "quantum_graph");
  const EigenfunctionConfig& ec = require(cfg.eigenfunction, "eigenfunction");
  if (!q.all_lengths_positive()) throw ValidationError("every edge length must be positive");
  const double k = ec.k ? *ec.k : root_from_file(*ec.roots_file, ec.root_index);
  const double tol = ctx.tol.value_or(1e-8);

  const StationaryVector v = least_singular_vector(q, k);
  const EigenfunctionSample sample = wavefunction(v, q, ec.samples);
  const BoundaryReport report = verify_boundary_conditions(sample, q);
  const StationarityForms prop = stationarity_forms(q, v);

  CsvTable psi({"arc_origin", "arc_terminus", "x", "re", "im"});
  for (const ArcSamples& arc : sample.arcs) {
    for (std::size_t s = 0; s < arc.x.size(); ++s) {
      psi.add_row({std::to_string(arc.arc.origin), std::to_string(arc.arc.terminus), format_number(arc.x[s]),
                   format_number(arc.psi[s].real()), format_number(arc.psi[s].imag())});
    }
  }
  CsvTable boundary({"vertex", "cond", "residual"});
  for (const ConditionResidual& r : report.rows) {
    boundary.add_row({std::to_string(r.vertex), r.condition, format_number(r.residual)});
  }
  CsvTable relations({"relation", "residual"});
  relations.add_row({"A[H]a=a", format_number(prop.a_type)});
  relations.add_row({"G[H*]a=a", format_number(prop.g_type_adjoint)});
  relations.add_row({"A[H*]b=b", format_number(prop.a_type_adjoint)});
  relations.add_row({"G[H]b=b", format_number(prop.g_type)});
  emit(ctx, psi, "eigenfunction.csv");
  emit(ctx, boundary, "boundary.csv");
  emit(ctx, relations, "stationarity.csv");

  const bool passed = v.residual <= 1e-9 && report.passed(tol);
  say(ctx, "k = " + format_number(k) + ", stationarity residual " + format_number(v.residual) +
               ", max boundary residual " + format_number(report.max_residual));
  return passed ? kSuccess : kVerificationFailed;
}

int cmd_partitions(const RunConfig& cfg, const CommandContext& ctx) {
  const Graph& g = require(cfg.graph, "graph");
  const ArcSpace arcs(g);
  const std::uint64_t count = partition_count(g);

  CsvTable summary({"vertices", "edges", "count"});
  summary.add_row({std::to_string(g.vertex_count()), std::to_string(g.edge_count()), std::to_string(count)});
  emit(ctx, summary, "partition_count.csv");
  say(ctx, std::to_string(count) + " partitions");
  if (!cfg.partitions.enumerate) return kSuccess;

  CsvTable table({"index", "cycles", "successors"});
  const std::vector<Partition> all = enumerate_partitions(arcs, cfg.partitions.cap);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::ostringstream succ;
    for (std::size_t a = 0; a < arcs.size(); ++a) succ << (a ? " " : "") << all[i].successor_at(a);
    table.add_row({std::to_string(i), std::to_string(all[i].cycles().size()), succ.str()});
  }
  emit(ctx, table, "partitions.csv");
  return kSuccess;
}

}  // namespace qgwalk::cli
