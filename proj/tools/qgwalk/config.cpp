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

#include "config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <regex>
#include <set>

#include "qgwalk/error.hpp"

namespace qgwalk::cli {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ValidationError("'" + where + "' must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ValidationError("unknown field '" + where + "." + key + "'");
  }
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ValidationError("'" + field + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError("'" + field + "' must be finite");
  return x;
}

int integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ValidationError("'" + field + "' must be an integer");
  return v.get<int>();
}

Complex complex_value(const json& v, const std::string& field) {
  if (v.is_number()) return {number(v, field), 0.0};
  if (v.is_array() && v.size() == 2) return {number(v[0], field), number(v[1], field)};
  throw ValidationError("'" + field + "' must be a number or [re, im]");
}

ComplexVector complex_vector(const json& v, const std::string& field) {
  if (!v.is_array()) throw ValidationError("'" + field + "' must be an array");
  ComplexVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = complex_value(v[i], field);
  return out;
}

ComplexMatrix complex_matrix(const json& v, const std::string& field) {
  if (!v.is_array() || v.empty()) throw ValidationError("'" + field + "' must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(v.size());
  ComplexMatrix m(rows, rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = v[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows) {
      throw ValidationError("'" + field + "' must be a square matrix");
    }
    for (Eigen::Index c = 0; c < rows; ++c) m(r, c) = complex_value(row[static_cast<std::size_t>(c)], field);
  }
  return m;
}

Vertex vertex_key(const std::string& key, const std::string& field) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("'" + field + "' key '" + key + "' is not a vertex label");
}

Graph parse_graph(const json& j) {
  check_keys(j, "graph", {"vertices", "edges", "family", "size"});
  if (j.contains("family")) {
    if (j.contains("edges") || j.contains("vertices")) {
      throw ValidationError("'graph' takes either family/size or vertices/edges");
    }
    if (!j.contains("size")) throw ValidationError("'graph.size' is required with 'graph.family'");
    const int n = integer(j.at("size"), "graph.size");
    const std::string family = j.at("family").get<std::string>();
    if (family == "path") return path_graph(n);
    if (family == "cycle") return cycle_graph(n);
    if (family == "star") return star_graph(n);
    if (family == "complete") return complete_graph(n);
    throw ValidationError("'graph.family' must be path, cycle, star or complete");
  }
  if (!j.contains("vertices") || !j.contains("edges")) {
    throw ValidationError("'graph' needs 'vertices' and 'edges'");
  }
  const int n = integer(j.at("vertices"), "graph.vertices");
  const json& edges = j.at("edges");
  if (!edges.is_array()) throw ValidationError("'graph.edges' must be an array of [i, j] pairs");
  std::vector<std::pair<Vertex, Vertex>> list;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("'graph.edges' entries must be [i, j] pairs");
    list.emplace_back(integer(e[0], "graph.edges"), integer(e[1], "graph.edges"));
  }
  return Graph(n, list);
}

TransitionMatrix parse_transition(const json& j, const ArcSpace& arcs) {
  if (j.is_string()) {
    if (j.get<std::string>() != "uniform") throw ValidationError("'transition' must be \"uniform\" or a map");
    return TransitionMatrix::uniform(arcs);
  }
  if (!j.is_object()) throw ValidationError("'transition' must be \"uniform\" or a map");
  std::vector<double> p(arcs.size(), -1.0);
  for (const auto& [key, value] : j.items()) {
    const Arc a = parse_arc_key(key, "transition");
    if (!arcs.contains(a)) throw ValidationError("'transition' key " + key + " is not an arc");
    p[arcs.index_of(a)] = number(value, "transition." + key);
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0) {
      const Arc a = arcs.arc(i);
      throw ValidationError("'transition' is missing arc (" + std::to_string(a.origin) + "," +
                            std::to_string(a.terminus) + ")");
    }
  }
  return TransitionMatrix(arcs, std::move(p));
}

Partition parse_partition(const json& j, const ArcSpace& arcs, std::mt19937_64& rng) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "flip-flop") return flip_flop_partition(arcs);
    if (s == "random") return random_partition(arcs, rng);
    throw ValidationError("'walk.partition' must be \"flip-flop\", \"random\" or a successor map");
  }
  if (!j.is_object()) throw ValidationError("'walk.partition' must be a string or a successor map");
  std::vector<Vertex> successor(arcs.size(), 0);
  for (const auto& [key, value] : j.items()) {
    const Arc a = parse_arc_key(key, "walk.partition");
    if (!arcs.contains(a)) throw ValidationError("'walk.partition' key " + key + " is not an arc");
    successor[arcs.index_of(a)] = integer(value, "walk.partition." + key);
  }
  for (std::size_t i = 0; i < successor.size(); ++i) {
    if (successor[i] == 0) {
      const Arc a = arcs.arc(i);
      throw ValidationError("'walk.partition' is missing arc (" + std::to_string(a.origin) + "," +
                            std::to_string(a.terminus) + ")");
    }
  }
  return Partition::from_successors(arcs, std::move(successor));
}

CoinSet parse_coins(const json& j, const Graph& g, const std::optional<TransitionMatrix>& transition,
                    std::mt19937_64& rng) {
  if (j.is_string()) {
    const std::string family = j.get<std::string>();
    if (family == "grover") return grover_coins(g);
    if (family == "identity") return CoinSet::identity(g);
    if (family == "random") return CoinSet::random(g, rng);
    if (family == "szegedy") {
      if (!transition) throw ValidationError("'walk.coin' szegedy needs a 'transition' section");
      return szegedy_coins(*transition);
    }
    throw ValidationError("'walk.coin' must be grover, identity, random, szegedy or a matrix map");
  }
  if (!j.is_object()) throw ValidationError("'walk.coin' must be a family name or a matrix map");
  std::map<Vertex, ComplexMatrix> by_vertex;
  for (const auto& [key, value] : j.items()) {
    const Vertex v = vertex_key(key, "walk.coin");
    if (v < 1 || v > g.vertex_count()) throw ValidationError("'walk.coin' vertex " + key + " out of range");
    by_vertex[v] = complex_matrix(value, "walk.coin." + key);
  }
  std::vector<ComplexMatrix> coins;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    auto it = by_vertex.find(v);
    if (it == by_vertex.end()) throw ValidationError("'walk.coin' is missing vertex " + std::to_string(v));
    coins.push_back(it->second);
  }
  return CoinSet(g, std::move(coins));
}

VertexStrength strength_value(const json& v, const std::string& field) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return VertexStrength::dirichlet();
    throw ValidationError("'" + field + "' must be a nonnegative number or \"inf\"");
  }
  return VertexStrength::finite(number(v, field));
}

QuantumGraphParams parse_quantum_graph(const json& j, const Graph& g) {
  check_keys(j, "quantum_graph", {"lengths", "lambdas", "potentials"});
  std::vector<double> lengths(g.edge_count(), 1.0);
  if (j.contains("lengths")) {
    const json& l = j.at("lengths");
    if (l.is_number()) {
      lengths.assign(g.edge_count(), number(l, "quantum_graph.lengths"));
    } else if (l.is_object()) {
      std::vector<bool> seen(g.edge_count(), false);
      for (const auto& [key, value] : l.items()) {
        const Arc a = parse_arc_key(key, "quantum_graph.lengths");
        if (!g.adjacent(a.origin, a.terminus)) throw ValidationError("'quantum_graph.lengths' key " + key + " is not an edge");
        const std::size_t e = g.edge_index(a.origin, a.terminus);
        lengths[e] = number(value, "quantum_graph.lengths." + key);
        seen[e] = true;
      }
      for (std::size_t e = 0; e < seen.size(); ++e) {
        if (!seen[e]) throw ValidationError("'quantum_graph.lengths' is missing an edge");
      }
    } else {
      throw ValidationError("'quantum_graph.lengths' must be a number or an edge map");
    }
  }
  std::vector<VertexStrength> strengths(static_cast<std::size_t>(g.vertex_count()), VertexStrength::neumann());
  if (j.contains("lambdas")) {
    const json& l = j.at("lambdas");
    if (l.is_object()) {
      for (const auto& [key, value] : l.items()) {
        const Vertex v = vertex_key(key, "quantum_graph.lambdas");
        if (v < 1 || v > g.vertex_count()) throw ValidationError("'quantum_graph.lambdas' vertex " + key + " out of range");
        strengths[static_cast<std::size_t>(v - 1)] = strength_value(value, "quantum_graph.lambdas." + key);
      }
    } else {
      strengths.assign(strengths.size(), strength_value(l, "quantum_graph.lambdas"));
    }
  }
  std::vector<double> potentials(g.edge_count(), 0.0);
  if (j.contains("potentials")) {
    const json& p = j.at("potentials");
    if (!p.is_object()) throw ValidationError("'quantum_graph.potentials' must be an arc map");
    for (const auto& [key, value] : p.items()) {
      const Arc a = parse_arc_key(key, "quantum_graph.potentials");
      if (!g.adjacent(a.origin, a.terminus)) throw ValidationError("'quantum_graph.potentials' key " + key + " is not an edge");
      const double x = number(value, "quantum_graph.potentials." + key);
      potentials[g.edge_index(a.origin, a.terminus)] = a.origin < a.terminus ? x : -x;
    }
  }
  return QuantumGraphParams(g, std::move(lengths), std::move(strengths), std::move(potentials));
}

EvolveConfig parse_evolve(const json& j, const ArcSpace& arcs) {
  check_keys(j, "evolve", {"steps", "initial"});
  EvolveConfig cfg;
  if (!j.contains("steps")) throw ValidationError("'evolve.steps' is required");
  cfg.steps = integer(j.at("steps"), "evolve.steps");
  if (cfg.steps < 0) throw ValidationError("'evolve.steps' must be nonnegative");
  if (!j.contains("initial")) throw ValidationError("'evolve.initial' is required");
  const json& init = j.at("initial");
  check_keys(init, "evolve.initial", {"arc", "vertex", "phi"});
  if (init.contains("arc")) {
    if (init.contains("vertex") || init.contains("phi")) {
      throw ValidationError("'evolve.initial' takes either 'arc' or 'vertex' with 'phi'");
    }
    const Arc a = parse_arc_key(init.at("arc").get<std::string>(), "evolve.initial.arc");
    if (!arcs.contains(a)) throw ValidationError("'evolve.initial.arc' is not an arc of the graph");
    cfg.initial = WalkState::at_arc(arcs, a);
  } else {
    if (!init.contains("vertex") || !init.contains("phi")) {
      throw ValidationError("'evolve.initial' needs 'arc' or both 'vertex' and 'phi'");
    }
    const Vertex v = integer(init.at("vertex"), "evolve.initial.vertex");
    if (v < 1 || v > arcs.graph().vertex_count()) throw ValidationError("'evolve.initial.vertex' out of range");
    cfg.initial = WalkState::local(arcs, v, complex_vector(init.at("phi"), "evolve.initial.phi"));
  }
  return cfg;
}

ScanConfig parse_scan(const json& j) {
  check_keys(j, "scan", {"k_min", "k_max", "points_per_unit", "refine_tol"});
  ScanConfig cfg;
  if (!j.contains("k_min") || !j.contains("k_max")) throw ValidationError("'scan' needs 'k_min' and 'k_max'");
  cfg.k_min = number(j.at("k_min"), "scan.k_min");
  cfg.k_max = number(j.at("k_max"), "scan.k_max");
  if (!(cfg.k_min > 0.0) || !(cfg.k_max > cfg.k_min)) throw ValidationError("'scan' needs 0 < k_min < k_max");
  if (j.contains("points_per_unit")) cfg.points_per_unit = number(j.at("points_per_unit"), "scan.points_per_unit");
  if (j.contains("refine_tol")) cfg.refine_tol = number(j.at("refine_tol"), "scan.refine_tol");
  if (!(cfg.points_per_unit > 0.0)) throw ValidationError("'scan.points_per_unit' must be positive");
  if (!(cfg.refine_tol > 0.0)) throw ValidationError("'scan.refine_tol' must be positive");
  return cfg;
}

EigenfunctionConfig parse_eigenfunction(const json& j, const std::filesystem::path& base_dir) {
  check_keys(j, "eigenfunction", {"k", "roots_file", "root_index", "samples"});
  EigenfunctionConfig cfg;
  if (j.contains("k") == j.contains("roots_file")) {
    throw ValidationError("'eigenfunction' needs exactly one of 'k' and 'roots_file'");
  }
  if (j.contains("k")) {
    cfg.k = number(j.at("k"), "eigenfunction.k");
    if (!(*cfg.k > 0.0)) throw ValidationError("'eigenfunction.k' must be positive");
  } else {
    std::filesystem::path p = j.at("roots_file").get<std::string>();
    cfg.roots_file = p.is_relative() ? base_dir / p : p;
  }
  if (j.contains("root_index")) cfg.root_index = integer(j.at("root_index"), "eigenfunction.root_index");
  if (j.contains("samples")) cfg.samples = integer(j.at("samples"), "eigenfunction.samples");
  if (cfg.root_index < 0) throw ValidationError("'eigenfunction.root_index' must be nonnegative");
  if (cfg.samples < 2) throw ValidationError("'eigenfunction.samples' must be at least 2");
  return cfg;
}

}  // namespace

Arc parse_arc_key(const std::string& key, const std::string& field) {
  static const std::regex pattern(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(key, m, pattern)) {
    throw ValidationError("'" + field + "': '" + key + "' is not of the form \"(i,j)\"");
  }
  return {std::stoi(m[1].str()), std::stoi(m[2].str())};
}

namespace {

RunConfig parse_document(const json& doc, std::uint64_t seed, const std::filesystem::path& base_dir) {
  check_keys(doc, "config",
             {"graph", "walk", "transition", "quantum_graph", "evolve", "scan", "eigenfunction", "verify",
              "partitions"});
  std::mt19937_64 rng(seed);
  RunConfig cfg;
  if (!doc.contains("graph")) throw ValidationError("'graph' is required");
  cfg.graph = parse_graph(doc.at("graph"));
  if (2 * cfg.graph->edge_count() > kMaxArcs) {
    throw ValidationError("'graph' has " + std::to_string(2 * cfg.graph->edge_count()) + " arcs; at most " +
                          std::to_string(kMaxArcs) + " are supported");
  }
  const ArcSpace arcs(*cfg.graph);

  if (doc.contains("transition")) cfg.transition = parse_transition(doc.at("transition"), arcs);
  if (doc.contains("walk")) {
    const json& w = doc.at("walk");
    check_keys(w, "walk", {"kind", "partition", "coin"});
    WalkKind kind = WalkKind::A;
    if (w.contains("kind")) {
      const std::string k = w.at("kind").get<std::string>();
      if (k == "A") {
        kind = WalkKind::A;
      } else if (k == "G") {
        kind = WalkKind::G;
      } else {
        throw ValidationError("'walk.kind' must be \"A\" or \"G\"");
      }
    }
    Partition partition = w.contains("partition") ? parse_partition(w.at("partition"), arcs, rng)
                                                  : flip_flop_partition(arcs);
    CoinSet coins = w.contains("coin") ? parse_coins(w.at("coin"), *cfg.graph, cfg.transition, rng)
                                       : grover_coins(*cfg.graph);
    cfg.walk = WalkConfig{kind, std::move(partition), std::move(coins)};
  }
  if (doc.contains("quantum_graph")) cfg.quantum_graph = parse_quantum_graph(doc.at("quantum_graph"), *cfg.graph);
  if (doc.contains("evolve")) cfg.evolve = parse_evolve(doc.at("evolve"), arcs);
  if (doc.contains("scan")) cfg.scan = parse_scan(doc.at("scan"));
  if (doc.contains("eigenfunction")) cfg.eigenfunction = parse_eigenfunction(doc.at("eigenfunction"), base_dir);
  if (doc.contains("verify")) {
    const json& v = doc.at("verify");
    check_keys(v, "verify", {"dual_steps"});
    if (v.contains("dual_steps")) cfg.verify.dual_steps = integer(v.at("dual_steps"), "verify.dual_steps");
    if (cfg.verify.dual_steps < 0) throw ValidationError("'verify.dual_steps' must be nonnegative");
  }
  if (doc.contains("partitions")) {
    const json& p = doc.at("partitions");
    check_keys(p, "partitions", {"cap", "enumerate"});
    if (p.contains("cap")) {
      if (!p.at("cap").is_number_unsigned()) throw ValidationError("'partitions.cap' must be a positive integer");
      cfg.partitions.cap = p.at("cap").get<std::uint64_t>();
    }
    if (p.contains("enumerate")) {
      if (!p.at("enumerate").is_boolean()) throw ValidationError("'partitions.enumerate' must be true or false");
      cfg.partitions.enumerate = p.at("enumerate").get<bool>();
    }
  }
  return cfg;
}

}  // namespace

RunConfig parse_config(const json& doc, std::uint64_t seed, const std::filesystem::path& base_dir) {
  try {
    return parse_document(doc, seed, base_dir);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config has a field of the wrong type: ") + e.what());
  }
}

RunConfig load_config(const std::filesystem::path& path, std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_config(doc, seed, path.parent_path());
}

}  // namespace qgwalk::cli
