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

// Link-prediction evaluation. Each sampled query node ranks every other
// node by cosine score; its held-out neighbors are the truth set.

#ifndef CNE_EVALUATOR_HPP_
#define CNE_EVALUATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cne/common.hpp"
#include "cne/graph.hpp"
#include "cne/text.hpp"
#include "cne/trainer.hpp"

namespace cne {

/// Row i holds the embedding of nodes[i], produced by the `side` encoder.
template <typename T>
struct EmbeddingMatrix {
  std::vector<NodeId> nodes;
  Matrix<T> rows;
  Side side = Side::kCenter;

  Vector<T> row(std::size_t i) const { return rows.row(i).transpose(); }
};

/// Composes every node in `nodes`. Works the same for nodes never seen in
/// training as long as `features` holds their attributes.
template <typename T>
EmbeddingMatrix<T> embed_all(const ModelState<T>& state,
                             std::span<const NodeId> nodes,
                             const FeatureStore& features, EdgeTypeId edge_type,
                             Side side, std::size_t workers = 1);

/// Candidate node ids sorted by descending score; ties go to the lower id.
/// `scores[i]` belongs to `candidates[i]`.
std::vector<NodeId> rank_by_score(std::span<const NodeId> candidates,
                                  std::span<const double> scores);

/// Ranks the rows of `matrix` against `query` by cosine, skipping `exclude`.
template <typename T>
std::vector<NodeId> rank_candidates(const Vector<T>& query,
                                    const EmbeddingMatrix<T>& matrix,
                                    const std::set<NodeId>& exclude);

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
};

/// |truth ∩ top-k| / k and |truth ∩ top-k| / |truth|.
PrecisionRecall precision_recall_at_k(std::span<const NodeId> ranked,
                                      const std::set<NodeId>& truth,
                                      std::size_t k);

/// Bucket boundaries 0, 2, 4, 8, ..., 1024.
std::vector<std::size_t> default_histogram_boundaries();

/// counts[i] covers [b[i], b[i+1]); the last entry counts ranks >= b.back().
std::vector<std::size_t> rank_histogram(
    std::span<const std::size_t> ranks,
    std::span<const std::size_t> boundaries);

enum class ScoreMode {
  kDirected,   // cos(phi1(q), phi2(c))
  kSymmetric,  // mean of cos(phi1(q), phi2(c)) and cos(phi1(c), phi2(q))
};

struct EvalOptions {
  std::vector<std::size_t> ks{10, 100};
  std::size_t sample_nodes = 1000;
  std::uint64_t seed = 1;
  std::string edge_type;  // empty: the model's first edge type
  ScoreMode mode = ScoreMode::kDirected;
  // When set, only these nodes may be queried.
  std::optional<std::set<NodeId>> query_nodes;
  // When set, only nodes of this type are candidates.
  std::optional<std::string> candidate_type;
  std::size_t workers = 1;
};

struct NodeRanks {
  NodeId node = 0;
  std::vector<std::size_t> truth_ranks;  // 0-based, ascending
  std::size_t truth_size = 0;
};

struct RankingReport {
  std::vector<std::size_t> ks;
  std::vector<double> precision;  // mean over queried nodes, per k
  std::vector<double> recall;
  std::vector<NodeRanks> nodes;   // ascending node id
  std::vector<std::size_t> boundaries;
  std::vector<std::size_t> histogram;
};

/// Held-out neighbors of every node under `edge_type`; both endpoints gain
/// the other unless `directed`.
std::vector<std::set<NodeId>> held_out_neighbors(std::size_t node_count,
                                                 const EdgeSet& test,
                                                 EdgeTypeId edge_type,
                                                 bool directed);

/// Samples up to `sample_nodes` nodes with at least one held-out neighbor
/// and ranks all other nodes for each. Raises kNoEvalNodes if none qualify.
template <typename T>
RankingReport evaluate_lp(const ModelState<T>& state, const Graph& train,
                          const EdgeSet& test, const FeatureStore& features,
                          const EvalOptions& options);

/// `k,precision,recall` rows, a blank line, then `bucket_lo,bucket_hi,count`
/// rows. The overflow bucket prints "inf" as its upper bound.
std::string format_report_csv(const RankingReport& report);

/// One {"node": label, "ranks": [...]} object per line.
std::string format_ranks_jsonl(const RankingReport& report, const Graph& g);

}  // namespace cne

#endif  // CNE_EVALUATOR_HPP_
