#include "textrank/similarity.hpp"

#include "textrank/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace textrank {
namespace {

std::map<std::string, std::size_t> term_counts(const std::vector<std::string>& tokens) {
    std::map<std::string, std::size_t> counts;
    for (const auto& t : tokens)
        ++counts[t];
    return counts;
}

void require_stats(const CorpusStats& stats) {
    if (stats.n_sentences == 0 || stats.avg_dl <= 0.0)
        throw StatsError("corpus statistics unavailable");
}

// Shared term-frequency kernel of Eq. BM25: f(k1+1) / (f + k1(1 - b + b|R|/avgDL))
double tf_kernel(double f, double r_len, const CorpusStats& stats,
                 const SimilarityConfig& cfg) {
    const double len_norm = cfg.k1 * (1.0 - cfg.b + cfg.b * r_len / stats.avg_dl);
    return f * (cfg.k1 + 1.0) / (f + len_norm);
}

double bm25_family_score(const Sentence& r, const Sentence& s, const CorpusStats& stats,
                         const SimilarityConfig& cfg, bool plus) {
    require_stats(stats);
    const auto r_counts = term_counts(r.tokens);
    const std::set<std::string> s_terms(s.tokens.begin(), s.tokens.end());
    const auto r_len = static_cast<double>(r.tokens.size());

    double score = 0.0;
    for (const auto& term : s_terms) {
        const auto it = r_counts.find(term);
        if (it == r_counts.end())
            continue; // term absent from R contributes 0
        const double f = static_cast<double>(it->second);
        const double idf = term_idf(term, stats, cfg);
        double contribution = tf_kernel(f, r_len, stats, cfg);
        if (plus)
            contribution += cfg.delta;
        score += idf * contribution;
    }
    return score;
}

std::string lowercase_copy(const std::string& s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

} // namespace

CorpusStats build_corpus_stats(const std::vector<Sentence>& sentences) {
    CorpusStats stats;
    std::size_t total_tokens = 0;
    for (const auto& s : sentences) {
        if (s.tokens.empty())
            continue;
        ++stats.n_sentences;
        total_tokens += s.tokens.size();
        const std::set<std::string> distinct(s.tokens.begin(), s.tokens.end());
        for (const auto& t : distinct)
            ++stats.doc_freq[t];
    }
    if (stats.n_sentences == 0)
        throw StatsError("collection has no sentence with tokens");

    stats.avg_dl = static_cast<double>(total_tokens) / static_cast<double>(stats.n_sentences);
    double idf_sum = 0.0;
    for (const auto& [term, n] : stats.doc_freq)
        idf_sum += standard_idf(stats.n_sentences, n);
    stats.avg_idf = idf_sum / static_cast<double>(stats.doc_freq.size());
    return stats;
}

double standard_idf(std::size_t n_sentences, std::size_t doc_freq) {
    return std::log(static_cast<double>(n_sentences) - static_cast<double>(doc_freq) + 0.5) -
           std::log(static_cast<double>(doc_freq) + 0.5);
}

double term_idf(const std::string& term, const CorpusStats& stats,
                const SimilarityConfig& cfg) {
    const auto it = stats.doc_freq.find(term);
    if (it == stats.doc_freq.end())
        throw StatsError("term missing from corpus stats: " + term);
    const std::size_t n = it->second;
    const std::size_t total = stats.n_sentences;
    if (n == 0 || n > total)
        throw StatsError("corrupted doc_freq entry for term: " + term);

    switch (cfg.idf_mode) {
    case IdfMode::naive:
        return std::log(static_cast<double>(total) / static_cast<double>(n));
    case IdfMode::zero_floor:
        return std::max(0.0, standard_idf(total, n));
    case IdfMode::corrected:
        if (2 * n <= total)
            return standard_idf(total, n);
        return std::max(0.0, cfg.epsilon * stats.avg_idf);
    }
    throw StatsError("unknown idf mode");
}

double overlap_similarity(const Sentence& a, const Sentence& b) {
    if (a.tokens.empty() || b.tokens.empty())
        return 0.0;
    const std::set<std::string> a_terms(a.tokens.begin(), a.tokens.end());
    std::size_t shared = 0;
    std::set<std::string> seen;
    for (const auto& t : b.tokens)
        if (a_terms.count(t) > 0 && seen.insert(t).second)
            ++shared;
    if (shared == 0)
        return 0.0;
    const double denom = std::log(static_cast<double>(a.tokens.size())) +
                         std::log(static_cast<double>(b.tokens.size()));
    if (denom <= 0.0)
        return 0.0;
    return static_cast<double>(shared) / denom;
}

double lcs_similarity(const Sentence& a, const Sentence& b) {
    const std::string x = lowercase_copy(a.raw);
    const std::string y = lowercase_copy(b.raw);
    if (x.empty() || y.empty())
        return 0.0;

    // rolling-row DP over common suffix lengths
    std::vector<std::size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
    std::size_t best = 0;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        for (std::size_t j = 1; j <= y.size(); ++j) {
            if (x[i - 1] == y[j - 1]) {
                cur[j] = prev[j - 1] + 1;
                best = std::max(best, cur[j]);
            } else {
                cur[j] = 0;
            }
        }
        std::swap(prev, cur);
    }
    return static_cast<double>(best);
}

TfIdfVector tfidf_vector(const Sentence& s, const CorpusStats& stats) {
    require_stats(stats);
    TfIdfVector vec;
    for (const auto& [term, count] : term_counts(s.tokens)) {
        const auto it = stats.doc_freq.find(term);
        if (it == stats.doc_freq.end())
            continue;
        const double idf = std::log(static_cast<double>(stats.n_sentences) /
                                    static_cast<double>(it->second));
        const double weight = static_cast<double>(count) * idf;
        if (weight > 0.0)
            vec.emplace(term, weight);
    }
    return vec;
}

double cosine_tfidf_similarity(const Sentence& a, const Sentence& b,
                               const CorpusStats& stats) {
    const TfIdfVector va = tfidf_vector(a, stats);
    const TfIdfVector vb = tfidf_vector(b, stats);

    double dot = 0.0;
    for (auto ia = va.begin(), ib = vb.begin(); ia != va.end() && ib != vb.end();) {
        if (ia->first == ib->first) {
            dot += ia->second * ib->second;
            ++ia;
            ++ib;
        } else if (ia->first < ib->first) {
            ++ia;
        } else {
            ++ib;
        }
    }
    double norm_a = 0.0, norm_b = 0.0;
    for (const auto& [term, w] : va)
        norm_a += w * w;
    for (const auto& [term, w] : vb)
        norm_b += w * w;
    if (norm_a == 0.0 || norm_b == 0.0)
        return 0.0;
    return std::clamp(dot / (std::sqrt(norm_a) * std::sqrt(norm_b)), 0.0, 1.0);
}

double bm25_score(const Sentence& r, const Sentence& s, const CorpusStats& stats,
                  const SimilarityConfig& cfg) {
    return bm25_family_score(r, s, stats, cfg, false);
}

double bm25_plus_score(const Sentence& r, const Sentence& s, const CorpusStats& stats,
                       const SimilarityConfig& cfg) {
    return bm25_family_score(r, s, stats, cfg, true);
}

double pairwise_weight(const Sentence& a, const Sentence& b, const CorpusStats& stats,
                       const SimilarityConfig& cfg) {
    double w = 0.0;
    switch (cfg.variant) {
    case SimilarityVariant::overlap:
        w = overlap_similarity(a, b);
        break;
    case SimilarityVariant::lcs:
        w = lcs_similarity(a, b);
        break;
    case SimilarityVariant::cosine_tfidf:
        w = cosine_tfidf_similarity(a, b, stats);
        break;
    case SimilarityVariant::bm25:
        w = 0.5 * (bm25_score(a, b, stats, cfg) + bm25_score(b, a, stats, cfg));
        break;
    case SimilarityVariant::bm25_plus:
        w = 0.5 * (bm25_plus_score(a, b, stats, cfg) + bm25_plus_score(b, a, stats, cfg));
        break;
    }
    return std::max(0.0, w);
}

const char* to_string(SimilarityVariant v) {
    switch (v) {
    case SimilarityVariant::overlap:
        return "overlap";
    case SimilarityVariant::lcs:
        return "lcs";
    case SimilarityVariant::cosine_tfidf:
        return "cosine";
    case SimilarityVariant::bm25:
        return "bm25";
    case SimilarityVariant::bm25_plus:
        return "bm25plus";
    }
    return "unknown";
}

const char* to_string(IdfMode m) {
    switch (m) {
    case IdfMode::corrected:
        return "corrected";
    case IdfMode::naive:
        return "naive";
    case IdfMode::zero_floor:
        return "zero";
    }
    return "unknown";
}

SimilarityVariant variant_from_string(const std::string& name) {
    if (name == "overlap")
        return SimilarityVariant::overlap;
    if (name == "lcs")
        return SimilarityVariant::lcs;
    if (name == "cosine")
        return SimilarityVariant::cosine_tfidf;
    if (name == "bm25")
        return SimilarityVariant::bm25;
    if (name == "bm25plus")
        return SimilarityVariant::bm25_plus;
    throw Error("unknown similarity variant: " + name);
}

IdfMode idf_mode_from_string(const std::string& name) {
    if (name == "corrected")
        return IdfMode::corrected;
    if (name == "naive")
        return IdfMode::naive;
    if (name == "zero")
        return IdfMode::zero_floor;
    throw Error("unknown idf mode: " + name);
}

} // namespace textrank
