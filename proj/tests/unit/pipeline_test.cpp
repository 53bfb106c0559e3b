// Copyright 2026 The CNE Authors. All Rights Reserved.
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

#include <sstream>

#include "doctest.h"
#include "cne/checkpoint.hpp"
#include "cne/pipeline.hpp"
#include "fixtures.hpp"

namespace cne {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

// A planted graph written to disk, plus a config that trains quickly.
struct Workspace {
  testing::TempDir dir;
  testing::PlantedGraph planted;
  RunConfig config;

  explicit Workspace(std::size_t extra_attribute_nodes = 0) {
    testing::PlantedOptions opts;
    opts.nodes = 40;
    opts.p_in = 0.25;
    opts.p_out = 0.02;
    opts.pool = 10;
    opts.shared = 5;
    planted = testing::planted_two_block(opts, 3);
    std::string edges = "# planted\n";
    for (const Edge& e : planted.graph.edges())
      edges += planted.graph.label(e.src) + "\t" +
               planted.graph.label(e.dst) + "\n";
    std::string attrs;
    for (const auto& [label, text] : planted.attributes)
      attrs += label + "\t" + text + "\n";
    for (std::size_t i = 0; i < extra_attribute_nodes; ++i)
      attrs += "fresh" + std::to_string(i) + "\tb0w1 b0w2 noise0\n";
    config.edges = dir.write("edges.tsv", edges);
    config.attributes = dir.write("attrs.tsv", attrs);
    config.checkpoint = dir.file("model.ckpt");
    config.train.token_dim = 4;
    config.train.hidden_dim = 4;
    config.train.walks_per_node = 2;
    config.train.walk_length = 8;
    config.train.batch = 16;
    config.train.epochs = 2;
    config.train.lr = 0.01;
  }
};

ErrorKind run_error(Command cmd, const RunConfig& c) {
  try {
    run_command(cmd, c);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("command succeeded unexpectedly");
  return ErrorKind::kInvalidArgument;
}

TEST_SUITE("pipeline") {

TEST_CASE("build-vocab writes one token per line") {
  Workspace ws;
  ws.config.vocab = ws.dir.file("vocab.txt");
  ws.config.max_vocab = 12;
  const auto summary = run_command(Command::kBuildVocab, ws.config);
  const auto lines = lines_of(testing::read_text(ws.config.vocab));
  REQUIRE(lines.size() == 13);
  CHECK(summary.rows == 13);
  CHECK(lines[0] == "<UNK>");
  CHECK(load_vocabulary(ws.config.vocab) ==
        build_vocabulary(ws.planted.attributes, 12));
}

TEST_CASE("walk output follows training-graph edges") {
  Workspace ws;
  ws.config.output = ws.dir.file("walks.txt");
  const auto summary = run_command(Command::kWalk, ws.config);
  const auto text = testing::read_text(ws.config.output);
  const auto lines = lines_of(text);
  REQUIRE(lines.size() == summary.rows + 1);
  CHECK(lines[0] == provenance_header(ws.config).substr(0, lines[0].size()));
  CHECK(summary.rows == 40 * ws.config.train.walks_per_node);

  const Dataset data = load_dataset(ws.config);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto walk = split(lines[i], ' ');
    REQUIRE(!walk.empty());
    CHECK(walk.size() <= ws.config.train.walk_length);
    for (std::size_t j = 0; j + 1 < walk.size(); ++j) {
      const NodeId a = *data.graph.find(walk[j]);
      const NodeId b = *data.graph.find(walk[j + 1]);
      const auto nbrs = data.graph.neighbors(0, a);
      CHECK(std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end());
    }
  }
  run_command(Command::kWalk, ws.config);
  CHECK(testing::read_text(ws.config.output) == text);
}

TEST_CASE("train, eval and embed produce their files") {
  Workspace ws(3);
  ws.config.loss_log = ws.dir.file("loss.csv");
  auto trained = run_command(Command::kTrain, ws.config);
  CHECK(trained.train.steps > 0);
  const auto model = load_checkpoint<float>(ws.config.checkpoint);
  CHECK(model.output_dim() == 4);
  CHECK(model.step == trained.train.steps);

  const auto loss = lines_of(testing::read_text(ws.config.loss_log));
  REQUIRE(loss.size() == 4);
  CHECK(loss[0].rfind("# cne config=", 0) == 0);
  CHECK(loss[1] == "epoch,edge_type,mean_loss");
  CHECK(loss[2].rfind("1,default,", 0) == 0);
  CHECK(loss[3].rfind("2,default,", 0) == 0);

  ws.config.report = ws.dir.file("report.csv");
  ws.config.ranks_jsonl = ws.dir.file("ranks.jsonl");
  ws.config.ks = {5, 10};
  const auto evaluated = run_command(Command::kEval, ws.config);
  const auto report = lines_of(testing::read_text(ws.config.report));
  REQUIRE(report.size() == 1 + 3 + 1 + 1 + 11);
  CHECK(report[1] == "k,precision,recall");
  CHECK(report[2].rfind("5,", 0) == 0);
  CHECK(report[4].empty());
  CHECK(report[5] == "bucket_lo,bucket_hi,count");
  const auto ranks = lines_of(testing::read_text(ws.config.ranks_jsonl));
  REQUIRE(ranks.size() == evaluated.eval.nodes.size() + 1);
  CHECK(ranks[0].find("\"cne_config\"") != std::string::npos);
  CHECK(ranks[1].find("\"ranks\"") != std::string::npos);

  ws.config.output = ws.dir.file("emb.tsv");
  const auto embedded = run_command(Command::kEmbed, ws.config);
  const auto rows = lines_of(testing::read_text(ws.config.output));
  CHECK(embedded.rows == 43);
  REQUIRE(rows.size() == 44);
  CHECK(rows.back().rfind("fresh2\t", 0) == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cols = split(rows[i], '\t');
    REQUIRE(cols.size() == 2);
    CHECK(split(cols[1], ',').size() == 4);
  }
}

TEST_CASE("training output depends only on the config") {
  Workspace ws;
  run_command(Command::kTrain, ws.config);
  const auto first = testing::read_text(ws.config.checkpoint);
  ws.config.train.workers = 3;
  run_command(Command::kTrain, ws.config);
  CHECK(testing::read_text(ws.config.checkpoint) == first);
  ws.config.train.seed = 2;
  run_command(Command::kTrain, ws.config);
  CHECK(testing::read_text(ws.config.checkpoint) != first);
}

TEST_CASE("a fixed test edge file replaces the split") {
  Workspace ws;
  const Edge known = ws.planted.graph.edges().front();
  ws.config.test_edges = ws.dir.write(
      "test.tsv", "n0\tnewcomer\n" + ws.planted.graph.label(known.src) +
                      "\t" + ws.planted.graph.label(known.dst) + "\n");
  const Dataset data = load_dataset(ws.config);
  // Training edges are not repeated as test edges.
  REQUIRE(data.test.edges.size() == 1);
  CHECK(data.graph.edge_count() == ws.planted.graph.edge_count());
  const auto newcomer = data.graph.find("newcomer");
  REQUIRE(newcomer);
  CHECK(data.graph.degree(*newcomer) == 0);
  CHECK(data.test.edges[0].dst == *newcomer);
  ws.config.test_edges.clear();
  const Dataset split = load_dataset(ws.config);
  CHECK(split.test.edges.size() + split.graph.edge_count() ==
        ws.planted.graph.edge_count());
  CHECK(split.test.edges.size() > 0);
}

TEST_CASE("input problems become warnings or errors") {
  Workspace ws;
  ws.config.edges = ws.dir.write(
      "edges.tsv", "n0\tn1\nn1\tn1\nn0\tn1\nstranger\tn0\n");
  ws.config.output = ws.dir.file("walks.txt");
  const auto summary = run_command(Command::kWalk, ws.config);
  std::string all;
  for (const auto& w : summary.warnings) all += w + "\n";
  CHECK(all.find("1 self-loop") != std::string::npos);
  CHECK(all.find("1 duplicate edge") != std::string::npos);
  CHECK(all.find("1 graph node(s) without attributes") != std::string::npos);

  RunConfig c = ws.config;
  c.output = ws.dir.file("missing-dir/walks.txt");
  CHECK(run_error(Command::kWalk, c) == ErrorKind::kIo);
  c = ws.config;
  c.edges = ws.dir.file("absent.tsv");
  CHECK(run_error(Command::kWalk, c) == ErrorKind::kIo);
  c = ws.config;
  c.output.clear();
  CHECK(run_error(Command::kWalk, c) == ErrorKind::kConfig);
  c = ws.config;
  c.edges = ws.dir.write("bad.tsv", "n0\n");
  CHECK(run_error(Command::kWalk, c) == ErrorKind::kParse);
  c = ws.config;
  c.report = ws.dir.file("r.csv");
  CHECK(run_error(Command::kEval, c) == ErrorKind::kIo);  // no checkpoint yet
}

TEST_CASE("eval on a model trained for other edge types is refused") {
  Workspace ws;
  std::string edges;
  for (const Edge& e : ws.planted.graph.edges())
    edges += ws.planted.graph.label(e.src) + "\t" +
             ws.planted.graph.label(e.dst) + "\t" +
             (e.src % 2 ? "a" : "b") + "\n";
  ws.config.edges = ws.dir.write("typed.tsv", edges);
  run_command(Command::kTrain, ws.config);
  ws.config.report = ws.dir.file("r.csv");
  ws.config.edge_type = "c";
  CHECK(run_error(Command::kEval, ws.config) == ErrorKind::kInvalidArgument);
  ws.config.edge_type = "a";
  CHECK(run_command(Command::kEval, ws.config).eval.nodes.size() > 0);
}

}  // TEST_SUITE

}  // namespace
}  // namespace cne
