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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "qgwalk/error.hpp"

namespace qgwalk::cli {
namespace {

using nlohmann::json;

RunConfig parse(const std::string& text, std::uint64_t seed = 1) { return parse_config(json::parse(text), seed); }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("qgwalk_cfg_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TEST(ArcKey, Parsing) {
  EXPECT_EQ(parse_arc_key("(1,2)", "f"), (Arc{1, 2}));
  EXPECT_EQ(parse_arc_key(" ( 3 , 14 ) ", "f"), (Arc{3, 14}));
  EXPECT_THROW(parse_arc_key("1,2", "f"), ValidationError);
  EXPECT_THROW(parse_arc_key("(1,-2)", "f"), ValidationError);
}

TEST(Config, GraphForms) {
  EXPECT_EQ(parse(R"js({"graph": {"family": "cycle", "size": 5}})js").graph->edge_count(), 5u);
  EXPECT_EQ(parse(R"js({"graph": {"family": "star", "size": 3}})js").graph->vertex_count(), 4);
  const RunConfig c = parse(R"js({"graph": {"vertices": 3, "edges": [[1, 2], [2, 3]]}})js");
  EXPECT_TRUE(c.graph->adjacent(2, 3));
  EXPECT_FALSE(c.walk.has_value());
  EXPECT_THROW(parse(R"js({"graph": {"family": "wheel", "size": 3}})js"), ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 3, "edges": []}})js"), ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"vertices": 3, "edges": [[1, 2]]}})js"), ValidationError);
  EXPECT_THROW(parse(R"js({})js"), ValidationError);
}

TEST(Config, RejectsUnknownKeysAndWrongTypes) {
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 2}, "colour": 1})js"), ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 2, "extra": 1}})js"), ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": 3, "size": 2}})js"), ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 2.5}})js"), ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 2}, "walk": {"kind": "B"}})js"), ValidationError);
}

TEST(Config, WalkDefaultsAndForms) {
  const RunConfig d = parse(R"js({"graph": {"family": "cycle", "size": 4}, "walk": {}})js");
  ASSERT_TRUE(d.walk);
  EXPECT_EQ(d.walk->kind, WalkKind::A);
  EXPECT_EQ(d.walk->partition, flip_flop_partition(ArcSpace(cycle_graph(4))));
  EXPECT_EQ(d.walk->coins.at(1), grover_coin(2));

  const RunConfig m = parse(R"js({"graph": {"family": "path", "size": 3},
    "walk": {"kind": "G", "partition": {"(1,2)": 3, "(2,1)": 2, "(2,3)": 2, "(3,2)": 1},
             "coin": {"1": [[1]], "2": [[0, [0, 1]], [[0, 1], 0]], "3": [[[0, -1]]]}}})js");
  EXPECT_EQ(m.walk->kind, WalkKind::G);
  EXPECT_EQ(m.walk->partition.successor({1, 2}), 3);
  EXPECT_EQ(m.walk->coins.at(2)(0, 1), Complex(0.0, 1.0));
  EXPECT_EQ(m.walk->coins.at(3)(0, 0), Complex(0.0, -1.0));

  // non-unitary coin, missing vertex, missing arc, bad successor
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 2}, "walk": {"coin": {"1": [[2]], "2": [[1]]}}})js"),
               ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 2}, "walk": {"coin": {"1": [[1]]}}})js"),
               ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 2}, "walk": {"partition": {"(1,2)": 1}}})js"),
               ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 3},
    "walk": {"partition": {"(1,2)": 3, "(2,1)": 2, "(2,3)": 3, "(3,2)": 2}}})js"),
               ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 2}, "walk": {"coin": "szegedy"}})js"), ValidationError);
}

TEST(Config, SeedDrivesRandomChoices) {
  const std::string text = R"js({"graph": {"family": "complete", "size": 4}, "walk": {"partition": "random", "coin": "random"}})js";
  const RunConfig a = parse(text, 5), b = parse(text, 5), c = parse(text, 6);
  EXPECT_EQ(a.walk->partition, b.walk->partition);
  EXPECT_EQ(a.walk->coins.at(1), b.walk->coins.at(1));
  EXPECT_NE(a.walk->coins.at(1), c.walk->coins.at(1));
}

TEST(Config, TransitionAndSzegedyCoin) {
  const RunConfig c = parse(R"js({"graph": {"family": "path", "size": 3},
    "transition": {"(1,2)": 1, "(2,1)": 0.25, "(2,3)": 0.75, "(3,2)": 1}, "walk": {"coin": "szegedy"}})js");
  EXPECT_EQ((*c.transition)(2, 3), 0.75);
  EXPECT_NEAR(c.walk->coins.at(2)(0, 0).real(), -0.5, 1e-15);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 3},
    "transition": {"(1,2)": 1, "(2,1)": 0.5, "(2,3)": 0.75, "(3,2)": 1}})js"),
               ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 3}, "transition": {"(1,2)": 1}})js"), ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 3}, "transition": "lazy"})js"), ValidationError);
}

TEST(Config, QuantumGraph) {
  const RunConfig c = parse(R"js({"graph": {"family": "path", "size": 3},
    "quantum_graph": {"lengths": {"(1,2)": 0.5, "(3,2)": 2}, "lambdas": {"1": "inf", "3": 1.5},
                      "potentials": {"(2,1)": 0.25}}})js");
  const QuantumGraphParams& q = *c.quantum_graph;
  EXPECT_EQ(q.length(Arc{2, 3}), 2.0);
  EXPECT_TRUE(q.strength(1).is_dirichlet());
  EXPECT_EQ(q.strength(2), VertexStrength::neumann());
  EXPECT_EQ(q.strength(3).value(), 1.5);
  EXPECT_EQ(q.arc_potential({1, 2}), -0.25);

  const RunConfig d = parse(R"js({"graph": {"family": "path", "size": 2}, "quantum_graph": {}})js");
  EXPECT_EQ(d.quantum_graph->length(std::size_t{0}), 1.0);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 2}, "quantum_graph": {"lengths": -1}})js"),
               ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 2}, "quantum_graph": {"lambdas": "big"}})js"),
               ValidationError);
  EXPECT_THROW(parse(R"js({"graph": {"family": "path", "size": 3}, "quantum_graph": {"lengths": {"(1,2)": 1}}})js"),
               ValidationError);
}

TEST(Config, EvolveScanEigenfunction) {
  const RunConfig c = parse(R"js({"graph": {"family": "cycle", "size": 4},
    "evolve": {"steps": 3, "initial": {"vertex": 2, "phi": [0.6, [0, 0.8]]}},
    "scan": {"k_min": 0.5, "k_max": 2, "points_per_unit": 100},
    "eigenfunction": {"k": 3.1, "samples": 5}, "verify": {"dual_steps": 2},
    "partitions": {"cap": 10, "enumerate": false}})js");
  EXPECT_EQ(c.evolve->steps, 3);
  EXPECT_NEAR(c.evolve->initial.amplitudes.norm(), 1.0, 1e-15);
  EXPECT_EQ(c.scan->points_per_unit, 100.0);
  EXPECT_EQ(c.scan->refine_tol, 1e-10);
  EXPECT_EQ(*c.eigenfunction->k, 3.1);
  EXPECT_EQ(c.verify.dual_steps, 2);
  EXPECT_EQ(c.partitions.cap, 10u);
  EXPECT_FALSE(c.partitions.enumerate);

  const std::string g = R"js({"graph": {"family": "cycle", "size": 4}, )js";
  EXPECT_THROW(parse(g + R"js("evolve": {"steps": 1, "initial": {"vertex": 2, "phi": [1, 1]}}})js"), ValidationError);
  EXPECT_THROW(parse(g + R"js("evolve": {"steps": 1, "initial": {"arc": "(1,3)"}}})js"), ValidationError);
  EXPECT_THROW(parse(g + R"js("evolve": {"steps": -1, "initial": {"arc": "(1,2)"}}})js"), ValidationError);
  EXPECT_THROW(parse(g + R"js("scan": {"k_min": 0, "k_max": 2}})js"), ValidationError);
  EXPECT_THROW(parse(g + R"js("scan": {"k_min": 3, "k_max": 2}})js"), ValidationError);
  EXPECT_THROW(parse(g + R"js("eigenfunction": {"k": 1, "roots_file": "r.csv"}})js"), ValidationError);
  EXPECT_THROW(parse(g + R"js("eigenfunction": {"samples": 3}})js"), ValidationError);
  EXPECT_THROW(parse(g + R"js("partitions": {"cap": -3}})js"), ValidationError);

  const RunConfig r = parse_config(json::parse(g + R"js("eigenfunction": {"roots_file": "roots.csv"}})js"), 1, "/base");
  EXPECT_EQ(*r.eigenfunction->roots_file, std::filesystem::path("/base/roots.csv"));
}

TEST(Config, LoadFromFile) {
  TempDir dir;
  EXPECT_THROW(load_config(dir.path() / "missing.json", 1), ValidationError);
  std::ofstream(dir.path() / "bad.json") << "{ not json";
  EXPECT_THROW(load_config(dir.path() / "bad.json", 1), ValidationError);
  std::ofstream(dir.path() / "ok.json") << R"js({"graph": {"family": "path", "size": 2},
    "eigenfunction": {"roots_file": "roots.csv"}})js";
  const RunConfig c = load_config(dir.path() / "ok.json", 1);
  EXPECT_EQ(*c.eigenfunction->roots_file, dir.path() / "roots.csv");
}

TEST(Csv, FormattingAndAtomicWrite) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
  CsvTable t({"a", "b"});
  t.add_row({"1", "2"});
  EXPECT_EQ(t.row_count(), 1u);
  EXPECT_EQ(t.str(), "a,b\n1,2\n");
  EXPECT_THROW(t.add_row({"1"}), std::exception);

  TempDir dir;
  write_atomic(dir.path() / "x.csv", t.str());
  EXPECT_EQ(read_file(dir.path() / "x.csv"), "a,b\n1,2\n");
  EXPECT_FALSE(std::filesystem::exists(dir.path() / "x.csv.tmp"));
}

TEST(Commands, EvolveWritesDistribution) {
  TempDir dir;
  const RunConfig c = parse(R"js({"graph": {"family": "path", "size": 2}, "walk": {"kind": "G"},
    "evolve": {"steps": 1, "initial": {"arc": "(1,2)"}}})js");
  CommandContext ctx;
  ctx.out_dir = dir.path();
  ASSERT_EQ(cmd_evolve(c, ctx), kSuccess);
  EXPECT_EQ(read_file(dir.path() / "distribution.csv"), "time,vertex,probability\n0,1,1\n0,2,0\n1,1,0\n1,2,1\n");
  EXPECT_THROW(cmd_evolve(parse(R"js({"graph": {"family": "path", "size": 2}})js"), ctx), ValidationError);
}

TEST(Commands, VerifyPasses) {
  TempDir dir;
  CommandContext ctx;
  ctx.out_dir = dir.path();
  ASSERT_EQ(cmd_verify(parse(R"js({"graph": {"family": "cycle", "size": 4}, "walk": {}})js"), ctx), kSuccess);
  const std::string csv = read_file(dir.path() / "verify.csv");
  EXPECT_EQ(csv.rfind("identity,residual,passed\n", 0), 0u);
  for (const char* id : {"dual", "inverse", "change-partition", "flip-flop-conversion", "a-to-a", "severini"}) {
    EXPECT_NE(csv.find(std::string("\n") + id + ","), std::string::npos) << id;
  }
  EXPECT_EQ(csv.find(",0\n"), std::string::npos);
}

TEST(Commands, PartitionCounts) {
  TempDir dir;
  CommandContext ctx;
  ctx.out_dir = dir.path();
  ASSERT_EQ(cmd_partitions(parse(R"js({"graph": {"family": "cycle", "size": 4}})js"), ctx), kSuccess);
  EXPECT_EQ(read_file(dir.path() / "partition_count.csv"), "vertices,edges,count\n4,4,16\n");
  std::istringstream lines(read_file(dir.path() / "partitions.csv"));
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) ++n;
  EXPECT_EQ(n, 17);
}

}  // namespace
}  // namespace qgwalk::cli
