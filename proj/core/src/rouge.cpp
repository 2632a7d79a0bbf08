#include "textrank/rouge.hpp"

#include "textrank/errors.hpp"
#include "textrank/porter_stemmer.hpp"
#include "textrank/text_pipeline.hpp"
#include "textrank/word_lists.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace textrank {
namespace {

constexpr char kSep = '\x1f';

std::size_t total_units(const UnitCounts& counts) {
    std::size_t total = 0;
    for (const auto& [unit, n] : counts)
        total += n;
    return total;
}

std::size_t clipped_matches(const UnitCounts& candidate, const UnitCounts& reference) {
    std::size_t matches = 0;
    for (const auto& [unit, cand_n] : candidate) {
        const auto it = reference.find(unit);
        if (it != reference.end())
            matches += std::min(cand_n, it->second);
    }
    return matches;
}

MetricTriple triple_from_counts(std::size_t matches, std::size_t ref_total,
                                std::size_t cand_total) {
    MetricTriple t;
    t.recall = ref_total > 0 ? static_cast<double>(matches) / static_cast<double>(ref_total) : 0.0;
    t.precision =
        cand_total > 0 ? static_cast<double>(matches) / static_cast<double>(cand_total) : 0.0;
    t.f1 = (t.recall + t.precision) > 0.0
               ? 2.0 * t.recall * t.precision / (t.recall + t.precision)
               : 0.0;
    return t;
}

MetricTriple combine(const std::vector<MetricTriple>& triples, MultiRefMode mode) {
    if (mode == MultiRefMode::max) {
        // best reference by f1, first on ties
        const auto best = std::max_element(
            triples.begin(), triples.end(),
            [](const MetricTriple& a, const MetricTriple& b) { return a.f1 < b.f1; });
        return *best;
    }
    MetricTriple mean;
    for (const auto& t : triples) {
        mean.recall += t.recall;
        mean.precision += t.precision;
        mean.f1 += t.f1;
    }
    const auto n = static_cast<double>(triples.size());
    mean.recall /= n;
    mean.precision /= n;
    mean.f1 /= n;
    return mean;
}

MetricTriple score_against_references(
    const UnitCounts& cand_units, std::size_t cand_total,
    const std::vector<UnitCounts>& ref_units, MultiRefMode mode) {
    std::vector<MetricTriple> triples;
    for (const auto& units : ref_units) {
        const std::size_t ref_total = total_units(units);
        if (ref_total == 0)
            continue; // reference contributes no units
        triples.push_back(triple_from_counts(clipped_matches(cand_units, units),
                                             ref_total, cand_total));
    }
    if (triples.empty())
        throw ScoreUndefinedError("every reference was skipped (no match units)");
    return combine(triples, mode);
}

UnitCounts su_units(const std::vector<std::string>& tokens, std::size_t max_skip) {
    UnitCounts units = skip_bigram_counts(tokens, max_skip);
    for (const auto& t : tokens)
        ++units[t];
    return units;
}

} // namespace

UnitCounts ngram_counts(const std::vector<std::string>& tokens, std::size_t n) {
    UnitCounts counts;
    if (n == 0 || tokens.size() < n)
        return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string key = tokens[i];
        for (std::size_t k = 1; k < n; ++k) {
            key.push_back(kSep);
            key += tokens[i + k];
        }
        ++counts[key];
    }
    return counts;
}

UnitCounts skip_bigram_counts(const std::vector<std::string>& tokens,
                              std::size_t max_skip) {
    UnitCounts counts;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::size_t last = std::min(tokens.size() - 1, i + max_skip + 1);
        for (std::size_t j = i + 1; j <= last; ++j) {
            std::string key = tokens[i];
            key.push_back(kSep);
            key += tokens[j];
            ++counts[key];
        }
    }
    return counts;
}

MetricTriple rouge_n(const std::vector<std::string>& candidate,
                     const std::vector<std::vector<std::string>>& references,
                     std::size_t n, const EvalConfig& cfg) {
    const UnitCounts cand = ngram_counts(candidate, n);
    const std::size_t cand_total =
        candidate.size() + 1 > n ? candidate.size() - n + 1 : 0;
    std::vector<UnitCounts> refs;
    refs.reserve(references.size());
    for (const auto& r : references)
        refs.push_back(ngram_counts(r, n));
    return score_against_references(cand, cand_total, refs, cfg.multi_ref_mode);
}

MetricTriple rouge_su4(const std::vector<std::string>& candidate,
                       const std::vector<std::vector<std::string>>& references,
                       const EvalConfig& cfg) {
    const UnitCounts cand = su_units(candidate, cfg.su4_skip);
    std::vector<UnitCounts> refs;
    refs.reserve(references.size());
    for (const auto& r : references)
        refs.push_back(su_units(r, cfg.su4_skip));
    return score_against_references(cand, total_units(cand), refs, cfg.multi_ref_mode);
}

std::vector<std::string> rouge_tokens(std::string_view text, const EvalConfig& cfg) {
    auto tokens = normalize_tokens(text);
    if (cfg.stopword_removal)
        tokens = remove_stopwords(tokens, default_stopwords());
    if (cfg.stemming)
        for (auto& t : tokens)
            t = porter_stem(t);
    return tokens;
}

RougeScore score_summary(std::string_view candidate,
                         const std::vector<std::string>& references,
                         const EvalConfig& cfg) {
    const auto cand_tokens = rouge_tokens(candidate, cfg);
    std::vector<std::vector<std::string>> ref_tokens;
    ref_tokens.reserve(references.size());
    for (const auto& r : references)
        ref_tokens.push_back(rouge_tokens(r, cfg));

    RougeScore score;
    score.rouge1 = rouge_n(cand_tokens, ref_tokens, 1, cfg);
    score.rouge2 = rouge_n(cand_tokens, ref_tokens, 2, cfg);
    score.rouge_su4 = rouge_su4(cand_tokens, ref_tokens, cfg);
    score.metric_average =
        (score.rouge1.recall + score.rouge2.recall + score.rouge_su4.recall) / 3.0;
    return score;
}

ConfidenceInterval bootstrap_mean_ci(const std::vector<double>& values,
                                     std::size_t samples, std::uint64_t seed) {
    if (values.empty() || samples == 0)
        return {};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    std::vector<double> means;
    means.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        double sum = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
            sum += values[pick(rng)];
        means.push_back(sum / static_cast<double>(values.size()));
    }
    std::sort(means.begin(), means.end());

    // type-7 interpolated quantile
    const auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(means.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = std::min(lo + 1, means.size() - 1);
        const double frac = pos - std::floor(pos);
        return means[lo] * (1.0 - frac) + means[hi] * frac;
    };
    return {quantile(0.025), quantile(0.975)};
}

} // namespace textrank
