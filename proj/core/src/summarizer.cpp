#include "textrank/summarizer.hpp"

#include "textrank/errors.hpp"

#include <algorithm>
#include <cmath>

namespace textrank {
namespace {

std::size_t ratio_target(double ratio, std::size_t n_sentences) {
    const auto target = static_cast<std::size_t>(
        std::ceil(ratio * static_cast<double>(n_sentences)));
    return std::min(std::max<std::size_t>(target, 1), n_sentences);
}

Summary assemble(std::vector<std::size_t> picked, const std::vector<Sentence>& sentences) {
    std::sort(picked.begin(), picked.end());
    Summary summary;
    summary.selected = std::move(picked);
    for (std::size_t k = 0; k < summary.selected.size(); ++k) {
        if (k > 0)
            summary.text.push_back(' ');
        summary.text += sentences[summary.selected[k]].raw;
    }
    return summary;
}

// Greedy fill: stop as soon as the next sentence would overflow the budget,
// but always admit the first one.
std::vector<std::size_t> fill_word_budget(const std::vector<std::size_t>& order,
                                          const std::vector<Sentence>& sentences,
                                          std::size_t budget) {
    std::vector<std::size_t> picked;
    std::size_t words = 0;
    for (const std::size_t idx : order) {
        const std::size_t count = sentences[idx].raw_tokens.size();
        if (!picked.empty() && words + count > budget)
            break;
        picked.push_back(idx);
        words += count;
    }
    return picked;
}

} // namespace

Summary select_top(const RankVector& ranks, const std::vector<Sentence>& sentences,
                   const SummaryConfig& cfg) {
    if (ranks.scores.empty())
        throw EmptyDocumentError("no ranked sentences to select from");

    // descending score, ties toward the earlier sentence
    std::vector<std::pair<double, std::size_t>> by_score;
    by_score.reserve(ranks.scores.size());
    for (const auto& [idx, score] : ranks.scores)
        by_score.emplace_back(score, idx);
    std::sort(by_score.begin(), by_score.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<std::size_t> order;
    order.reserve(by_score.size());
    for (const auto& [score, idx] : by_score)
        order.push_back(idx);

    std::vector<std::size_t> picked;
    if (cfg.mode == SizingMode::ratio) {
        const std::size_t target = ratio_target(cfg.ratio, sentences.size());
        const std::size_t take = std::min(target, order.size());
        picked.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
    } else {
        picked = fill_word_budget(order, sentences, cfg.word_budget);
    }
    return assemble(std::move(picked), sentences);
}

Summary summarize(std::string_view text, const PipelineConfig& pipeline_cfg,
                  const SimilarityConfig& sim_cfg, const RankConfig& rank_cfg,
                  const SummaryConfig& summary_cfg) {
    RawDocument doc{"", std::string(text)};
    const auto sentences = preprocess(doc, pipeline_cfg);
    const RankVector ranks = rank_sentences(sentences, sim_cfg, rank_cfg);
    return select_top(ranks, sentences, summary_cfg);
}

Summary baseline_lead(std::string_view text, const PipelineConfig& pipeline_cfg,
                      const SummaryConfig& summary_cfg) {
    RawDocument doc{"", std::string(text)};
    const auto sentences = preprocess(doc, pipeline_cfg);

    std::vector<std::size_t> picked;
    if (summary_cfg.mode == SizingMode::ratio) {
        const std::size_t take = ratio_target(summary_cfg.ratio, sentences.size());
        for (std::size_t i = 0; i < take; ++i)
            picked.push_back(i);
    } else {
        std::vector<std::size_t> order(sentences.size());
        for (std::size_t i = 0; i < sentences.size(); ++i)
            order[i] = i;
        picked = fill_word_budget(order, sentences, summary_cfg.word_budget);
    }
    return assemble(std::move(picked), sentences);
}

} // namespace textrank
