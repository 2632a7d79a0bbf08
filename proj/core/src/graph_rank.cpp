#include "textrank/graph_rank.hpp"

#include "textrank/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_map>

namespace textrank {

SentenceGraph build_graph(const std::vector<Sentence>& sentences,
                          const CorpusStats& stats, const SimilarityConfig& cfg) {
    SentenceGraph graph;
    std::vector<const Sentence*> nodes;
    for (const auto& s : sentences) {
        if (!s.graph_eligible)
            continue;
        graph.node_ids.push_back(s.index);
        nodes.push_back(&s);
    }
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            const double w = pairwise_weight(*nodes[a], *nodes[b], stats, cfg);
            if (w > 0.0 && std::isfinite(w))
                graph.edges.push_back({nodes[a]->index, nodes[b]->index, w});
        }
    }
    return graph;
}

RankVector pagerank(const SentenceGraph& graph, const RankConfig& cfg) {
    const std::size_t n = graph.node_ids.size();
    RankVector result;
    if (n == 0)
        return result;

    std::unordered_map<std::size_t, std::size_t> dense_of;
    dense_of.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        dense_of.emplace(graph.node_ids[i], i);

    // incoming mass per node: (source, w(source,target) / strength(source))
    std::vector<double> strength(n, 0.0);
    for (const auto& e : graph.edges) {
        strength[dense_of.at(e.i)] += e.weight;
        strength[dense_of.at(e.j)] += e.weight;
    }
    std::vector<std::vector<std::pair<std::size_t, double>>> incoming(n);
    for (const auto& e : graph.edges) {
        const std::size_t a = dense_of.at(e.i);
        const std::size_t b = dense_of.at(e.j);
        incoming[b].emplace_back(a, e.weight / strength[a]);
        incoming[a].emplace_back(b, e.weight / strength[b]);
    }

    const double d = cfg.damping;
    std::vector<double> score(n, 1.0), next(n, 0.0);
    for (std::size_t sweep = 1; sweep <= cfg.max_iterations; ++sweep) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (const auto& [src, mass] : incoming[i])
                sum += mass * score[src];
            next[i] = (1.0 - d) + d * sum;
        }
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            residual += std::abs(next[i] - score[i]);
        score.swap(next);
        result.iterations_used = sweep;
        result.final_residual = residual;
        result.residual_history.push_back(residual);
        if (residual <= cfg.tolerance) {
            result.converged = true;
            break;
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        result.scores.emplace(graph.node_ids[i], score[i]);
    return result;
}

RankVector rank_sentences(const std::vector<Sentence>& sentences,
                          const SimilarityConfig& sim_cfg, const RankConfig& rank_cfg) {
    std::vector<Sentence> graph_sentences;
    for (const auto& s : sentences)
        if (s.graph_eligible)
            graph_sentences.push_back(s);
    const CorpusStats stats = build_corpus_stats(graph_sentences);
    const SentenceGraph graph = build_graph(sentences, stats, sim_cfg);
    return pagerank(graph, rank_cfg);
}

void write_edge_list(const SentenceGraph& graph, std::ostream& out) {
    char buf[64];
    for (const auto& e : graph.edges) {
        std::snprintf(buf, sizeof(buf), "%.12g", e.weight);
        out << e.i << '\t' << e.j << '\t' << buf << '\n';
    }
}

void write_edge_list(const SentenceGraph& graph, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write edge list: " + path.string());
    write_edge_list(graph, out);
}

} // namespace textrank
