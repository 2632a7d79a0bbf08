#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace textrank {

struct MetricTriple {
    double recall = 0.0;
    double precision = 0.0;
    double f1 = 0.0;

    bool operator==(const MetricTriple&) const = default;
};

/// ROUGE-1 / ROUGE-2 / ROUGE-SU4 components plus the mean of the three
/// recall values, the headline number of DUC-era reporting.
struct RougeScore {
    MetricTriple rouge1;
    MetricTriple rouge2;
    MetricTriple rouge_su4;
    double metric_average = 0.0;
};

enum class MultiRefMode { average, max };

struct EvalConfig {
    bool stemming = true;
    bool stopword_removal = false;
    std::size_t su4_skip = 4; // fixed for the SU4 metric
    MultiRefMode multi_ref_mode = MultiRefMode::average;
    std::size_t bootstrap_samples = 0; // 0 disables confidence intervals
};

/// Multiset of match units; n-grams are encoded as tokens joined by 0x1f.
using UnitCounts = std::map<std::string, std::size_t>;

/// All contiguous n-grams with multiplicity; max(0, len - n + 1) units.
UnitCounts ngram_counts(const std::vector<std::string>& tokens, std::size_t n);

/// Ordered pairs (t_i, t_j) with at most max_skip intervening tokens,
/// with multiplicity.
UnitCounts skip_bigram_counts(const std::vector<std::string>& tokens,
                              std::size_t max_skip = 4);

/// Clipped n-gram recall/precision/f1 against one or more references,
/// combined per multi_ref_mode. References without n-grams are skipped;
/// throws ScoreUndefinedError when every reference is skipped.
MetricTriple rouge_n(const std::vector<std::string>& candidate,
                     const std::vector<std::vector<std::string>>& references,
                     std::size_t n, const EvalConfig& cfg);

/// Skip-bigrams (gap <= 4) plus unigrams as the unit pool, otherwise as
/// rouge_n.
MetricTriple rouge_su4(const std::vector<std::string>& candidate,
                       const std::vector<std::vector<std::string>>& references,
                       const EvalConfig& cfg);

/// Tokenization used for scoring: normalize, optional stopword removal,
/// optional Porter stemming.
std::vector<std::string> rouge_tokens(std::string_view text, const EvalConfig& cfg);

/// Scores a candidate summary against reference texts on all three metrics.
RougeScore score_summary(std::string_view candidate,
                         const std::vector<std::string>& references,
                         const EvalConfig& cfg);

/// Nonparametric bootstrap percentile interval (2.5%..97.5%) of the mean of
/// `values`, resampling with replacement `samples` times. Deterministic for
/// a fixed seed.
struct ConfidenceInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool operator==(const ConfidenceInterval&) const = default;
};
ConfidenceInterval bootstrap_mean_ci(const std::vector<double>& values,
                                     std::size_t samples,
                                     std::uint64_t seed = 0x7265736d);

} // namespace textrank
