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

#include "cne/evaluator.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "json.hpp"
#include "parallel.hpp"

namespace cne {

namespace {

constexpr std::uint64_t kSampleStream = 0x4556'414c;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct ResolvedTypes {
  EdgeTypeId model;
  EdgeTypeId graph;
};

template <typename T>
ResolvedTypes resolve_edge_type(const ModelState<T>& state, const Graph& g,
                                const std::string& requested) {
  require(!state.edge_types.empty(), "model has no edge types");
  const std::string& name =
      requested.empty() ? state.edge_types.front().name : requested;
  auto model = state.find_edge_type(name);
  if (!model)
    throw Error(ErrorKind::kInvalidArgument,
                "model has no encoders for edge type '" + name + "'");
  auto graph = g.find_edge_type(name);
  if (!graph) {
    // A single-type model evaluates whatever single type the graph has.
    if (state.edge_types.size() == 1 && g.edge_type_count() == 1)
      graph = EdgeTypeId{0};
    else
      throw Error(ErrorKind::kInvalidArgument,
                  "graph has no edge type '" + name + "'");
  }
  return {*model, *graph};
}

}  // namespace

template <typename T>
EmbeddingMatrix<T> embed_all(const ModelState<T>& state,
                             std::span<const NodeId> nodes,
                             const FeatureStore& features, EdgeTypeId edge_type,
                             Side side, std::size_t workers) {
  EmbeddingMatrix<T> out;
  out.nodes.assign(nodes.begin(), nodes.end());
  out.side = side;
  out.rows.resize(static_cast<Eigen::Index>(nodes.size()),
                  static_cast<Eigen::Index>(state.output_dim()));
  detail::parallel_for(nodes.size(), workers, [&](std::size_t i) {
    const NodeId v = nodes[i];
    const auto& enc =
        state.encoders[state.encoder_for(edge_type, features.node_type(v),
                                         side)];
    out.rows.row(static_cast<Eigen::Index>(i)) =
        compose(enc, state.table, features.at(v)).transpose();
  });
  return out;
}

std::vector<NodeId> rank_by_score(std::span<const NodeId> candidates,
                                  std::span<const double> scores) {
  require(candidates.size() == scores.size(),
          "one score per candidate is required");
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return candidates[a] < candidates[b];
  });
  std::vector<NodeId> ranked;
  ranked.reserve(order.size());
  for (std::size_t i : order) ranked.push_back(candidates[i]);
  return ranked;
}

template <typename T>
std::vector<NodeId> rank_candidates(const Vector<T>& query,
                                    const EmbeddingMatrix<T>& matrix,
                                    const std::set<NodeId>& exclude) {
  require(query.size() == matrix.rows.cols(),
          "query width does not match the embedding matrix");
  std::vector<NodeId> ids;
  std::vector<double> scores;
  for (std::size_t i = 0; i < matrix.nodes.size(); ++i) {
    if (exclude.count(matrix.nodes[i])) continue;
    ids.push_back(matrix.nodes[i]);
    scores.push_back(static_cast<double>(cosine<T>(query, matrix.row(i))));
  }
  return rank_by_score(ids, scores);
}

PrecisionRecall precision_recall_at_k(std::span<const NodeId> ranked,
                                      const std::set<NodeId>& truth,
                                      std::size_t k) {
  require(k >= 1, "k must be at least 1");
  require(!truth.empty(), "truth set must not be empty");
  const std::size_t top = std::min(k, ranked.size());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < top; ++i) hits += truth.count(ranked[i]);
  return {static_cast<double>(hits) / static_cast<double>(k),
          static_cast<double>(hits) / static_cast<double>(truth.size())};
}

std::vector<std::size_t> default_histogram_boundaries() {
  std::vector<std::size_t> b{0};
  for (std::size_t x = 2; x <= 1024; x *= 2) b.push_back(x);
  return b;
}

std::vector<std::size_t> rank_histogram(
    std::span<const std::size_t> ranks,
    std::span<const std::size_t> boundaries) {
  require(!boundaries.empty() && boundaries.front() == 0,
          "histogram boundaries must start at 0");
  require(std::is_sorted(boundaries.begin(), boundaries.end()),
          "histogram boundaries must ascend");
  std::vector<std::size_t> counts(boundaries.size(), 0);
  for (std::size_t r : ranks) {
    auto it = std::upper_bound(boundaries.begin(), boundaries.end(), r);
    ++counts[static_cast<std::size_t>(it - boundaries.begin()) - 1];
  }
  return counts;
}

std::vector<std::set<NodeId>> held_out_neighbors(std::size_t node_count,
                                                 const EdgeSet& test,
                                                 EdgeTypeId edge_type,
                                                 bool directed) {
  std::vector<std::set<NodeId>> truth(node_count);
  for (const Edge& e : test.edges) {
    if (e.type != edge_type) continue;
    require(e.src < node_count && e.dst < node_count,
            "test edge endpoint is not a graph node");
    truth[e.src].insert(e.dst);
    if (!directed) truth[e.dst].insert(e.src);
  }
  return truth;
}

template <typename T>
RankingReport evaluate_lp(const ModelState<T>& state, const Graph& train,
                          const EdgeSet& test, const FeatureStore& features,
                          const EvalOptions& options) {
  for (std::size_t k : options.ks)
    if (k == 0) throw Error(ErrorKind::kInvalidArgument, "k must be >= 1");
  const std::size_t n = train.node_count();
  if (features.size() < n)
    throw Error(ErrorKind::kMissingAttributes,
                "features cover fewer nodes than the graph");
  const ResolvedTypes types = resolve_edge_type(state, train, options.edge_type);

  std::vector<char> is_candidate(n, 1);
  if (options.candidate_type)
    for (NodeId v = 0; v < n; ++v)
      is_candidate[v] = train.node_type(v) == *options.candidate_type;

  auto truth = held_out_neighbors(n, test, types.graph, train.directed());
  std::vector<NodeId> eligible;
  for (NodeId v = 0; v < n; ++v) {
    if (options.query_nodes && !options.query_nodes->count(v)) continue;
    std::erase_if(truth[v], [&](NodeId u) { return !is_candidate[u]; });
    if (!truth[v].empty()) eligible.push_back(v);
  }
  if (eligible.empty())
    throw Error(ErrorKind::kNoEvalNodes,
                "no evaluation node has a held-out neighbor");
  if (eligible.size() > options.sample_nodes) {
    Rng rng(derive_seed(options.seed, kSampleStream));
    rng.shuffle(eligible);
    eligible.resize(options.sample_nodes);
    std::sort(eligible.begin(), eligible.end());
  }

  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), NodeId{0});
  const auto center = embed_all(state, std::span<const NodeId>(all), features,
                                types.model, Side::kCenter, options.workers);
  const auto context = embed_all(state, std::span<const NodeId>(all), features,
                                 types.model, Side::kContext, options.workers);

  RankingReport report;
  report.ks = options.ks;
  report.boundaries = default_histogram_boundaries();
  report.nodes.resize(eligible.size());
  std::vector<std::vector<PrecisionRecall>> per_node(eligible.size());

  detail::parallel_for(eligible.size(), options.workers, [&](std::size_t i) {
    const NodeId q = eligible[i];
    std::vector<NodeId> ids;
    std::vector<double> scores;
    const Vector<T> q1 = center.row(q), q2 = context.row(q);
    for (NodeId c = 0; c < n; ++c) {
      if (c == q || !is_candidate[c]) continue;
      double s = static_cast<double>(cosine<T>(q1, context.row(c)));
      if (options.mode == ScoreMode::kSymmetric)
        s = 0.5 * (s + static_cast<double>(cosine<T>(center.row(c), q2)));
      ids.push_back(c);
      scores.push_back(s);
    }
    const auto ranked = rank_by_score(ids, scores);
    NodeRanks& nr = report.nodes[i];
    nr.node = q;
    nr.truth_size = truth[q].size();
    for (std::size_t r = 0; r < ranked.size(); ++r)
      if (truth[q].count(ranked[r])) nr.truth_ranks.push_back(r);
    for (std::size_t k : options.ks)
      per_node[i].push_back(precision_recall_at_k(ranked, truth[q], k));
  });

  const double count = static_cast<double>(eligible.size());
  for (std::size_t j = 0; j < options.ks.size(); ++j) {
    double p = 0.0, r = 0.0;
    for (const auto& pr : per_node) {
      p += pr[j].precision;
      r += pr[j].recall;
    }
    report.precision.push_back(p / count);
    report.recall.push_back(r / count);
  }
  std::vector<std::size_t> ranks;
  for (const auto& nr : report.nodes)
    ranks.insert(ranks.end(), nr.truth_ranks.begin(), nr.truth_ranks.end());
  report.histogram = rank_histogram(ranks, report.boundaries);
  return report;
}

std::string format_report_csv(const RankingReport& report) {
  std::string out = "k,precision,recall\n";
  for (std::size_t j = 0; j < report.ks.size(); ++j)
    out += std::to_string(report.ks[j]) + "," +
           format_double(report.precision[j]) + "," +
           format_double(report.recall[j]) + "\n";
  out += "\nbucket_lo,bucket_hi,count\n";
  for (std::size_t i = 0; i < report.histogram.size(); ++i) {
    const std::string hi = i + 1 < report.boundaries.size()
                               ? std::to_string(report.boundaries[i + 1])
                               : "inf";
    out += std::to_string(report.boundaries[i]) + "," + hi + "," +
           std::to_string(report.histogram[i]) + "\n";
  }
  return out;
}

std::string format_ranks_jsonl(const RankingReport& report, const Graph& g) {
  std::string out;
  for (const auto& nr : report.nodes) {
    nlohmann::json line{{"node", g.label(nr.node)},
                        {"truth_size", nr.truth_size},
                        {"ranks", nr.truth_ranks}};
    out += line.dump() + "\n";
  }
  return out;
}

#define CNE_INSTANTIATE(T)                                                    \
  template EmbeddingMatrix<T> embed_all(const ModelState<T>&,                 \
                                        std::span<const NodeId>,              \
                                        const FeatureStore&, EdgeTypeId,      \
                                        Side, std::size_t);                   \
  template std::vector<NodeId> rank_candidates(                              \
      const Vector<T>&, const EmbeddingMatrix<T>&, const std::set<NodeId>&);  \
  template RankingReport evaluate_lp(const ModelState<T>&, const Graph&,      \
                                     const EdgeSet&, const FeatureStore&,     \
                                     const EvalOptions&);

CNE_INSTANTIATE(float)
CNE_INSTANTIATE(double)

#undef CNE_INSTANTIATE

}  // namespace cne
