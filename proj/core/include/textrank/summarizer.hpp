#pragma once

#include "textrank/graph_rank.hpp"
#include "textrank/similarity.hpp"
#include "textrank/text_pipeline.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace textrank {

enum class SizingMode { ratio, word_budget };

/// Target summary size: a fraction of the sentence count (ratio mode,
/// rounded up) or a word budget filled greedily in score order.
struct SummaryConfig {
    SizingMode mode = SizingMode::ratio;
    double ratio = 0.2;            // in (0, 1]
    std::size_t word_budget = 100; // used when mode == word_budget
};

/// Selected sentence indices in ascending document order plus the assembled
/// text (raw sentences joined by a single space).
struct Summary {
    std::vector<std::size_t> selected;
    std::string text;
};

/// Picks the top-scored graph sentences per the sizing rule. Score ties break
/// toward the smaller sentence index; output is ordered by document position.
/// `sentences` is the full document so degenerate sentences still count
/// toward the ratio denominator. Throws EmptyDocumentError on an empty rank
/// vector.
Summary select_top(const RankVector& ranks, const std::vector<Sentence>& sentences,
                   const SummaryConfig& cfg);

/// Full pipeline: preprocess, rank, select. Deterministic for fixed configs.
Summary summarize(std::string_view text, const PipelineConfig& pipeline_cfg,
                  const SimilarityConfig& sim_cfg, const RankConfig& rank_cfg,
                  const SummaryConfig& summary_cfg);

/// Lead baseline: the first sentences of the document under the same sizing
/// rule as select_top.
Summary baseline_lead(std::string_view text, const PipelineConfig& pipeline_cfg,
                      const SummaryConfig& summary_cfg);

} // namespace textrank
