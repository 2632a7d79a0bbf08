#pragma once

#include "textrank/similarity.hpp"
#include "textrank/text_pipeline.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <ostream>
#include <vector>

namespace textrank {

/// Undirected weighted edge between sentence indices, stored with i < j.
struct GraphEdge {
    std::size_t i = 0;
    std::size_t j = 0;
    double weight = 0.0;
};

/// Weighted undirected graph over the sentence indices admitted as nodes.
/// Only strictly positive, finite weights are stored; nodes without a
/// positive edge stay in `node_ids`.
struct SentenceGraph {
    std::vector<std::size_t> node_ids; // ascending
    std::vector<GraphEdge> edges;      // sorted by (i, j)
};

struct RankConfig {
    double damping = 0.85;
    double tolerance = 1e-6;       // L1 change between sweeps
    std::size_t max_iterations = 100;
};

/// Scores per node id plus convergence diagnostics. Scores follow the
/// (1 - d) + d * sum convention and are not normalized to sum to 1.
struct RankVector {
    std::map<std::size_t, double> scores;
    std::size_t iterations_used = 0;
    double final_residual = 0.0;
    bool converged = false;
    std::vector<double> residual_history;
};

/// Evaluates pairwise_weight for every unordered pair of graph-eligible
/// sentences and keeps the positive ones as edges.
SentenceGraph build_graph(const std::vector<Sentence>& sentences,
                          const CorpusStats& stats, const SimilarityConfig& cfg);

/// Weighted PageRank power iteration from the all-ones vector, Jacobi-style
/// sweeps over a frozen previous vector. Isolated nodes settle at (1 - d).
/// Returns a non-converged result (never throws) when max_iterations is hit.
RankVector pagerank(const SentenceGraph& graph, const RankConfig& cfg);

/// build_corpus_stats + build_graph + pagerank over the graph-eligible
/// sentences of one document.
RankVector rank_sentences(const std::vector<Sentence>& sentences,
                          const SimilarityConfig& sim_cfg, const RankConfig& rank_cfg);

/// Debug dump: one `i<TAB>j<TAB>weight` line per edge, 12 significant digits.
void write_edge_list(const SentenceGraph& graph, std::ostream& out);
void write_edge_list(const SentenceGraph& graph, const std::filesystem::path& path);

} // namespace textrank
