#pragma once

#include "textrank/text_pipeline.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace textrank {

enum class SimilarityVariant { overlap, lcs, cosine_tfidf, bm25, bm25_plus };
enum class IdfMode { corrected, naive, zero_floor };

/// Edge-weight variant plus its parameters. Defaults follow the strongest
/// reported configuration: BM25 with k1 = 1.2, b = 0.75 and the corrected
/// IDF with epsilon = 0.25; delta = 1.0 applies to BM25+ only.
struct SimilarityConfig {
    SimilarityVariant variant = SimilarityVariant::bm25;
    double k1 = 1.2;
    double b = 0.75;
    double delta = 1.0;
    double epsilon = 0.25;
    IdfMode idf_mode = IdfMode::corrected;
};

/// Per-collection term statistics. The collection is the set of graph
/// sentences of one document: doc_freq counts sentence-level presence,
/// avg_dl is the mean token count, and avg_idf the arithmetic mean of the
/// uncorrected standard IDF over all distinct terms (negatives included).
struct CorpusStats {
    std::size_t n_sentences = 0;
    std::map<std::string, std::size_t> doc_freq;
    double avg_dl = 0.0;
    double avg_idf = 0.0;
};

/// Sparse TF-IDF representation; zero weights are never stored.
using TfIdfVector = std::map<std::string, double>;

/// Builds stats over the given sentences; entries without tokens are ignored.
/// Throws StatsError when no sentence has a token.
CorpusStats build_corpus_stats(const std::vector<Sentence>& sentences);

/// log(N - n + 0.5) - log(n + 0.5), the uncorrected BM25 IDF. Negative when
/// n exceeds half the collection.
double standard_idf(std::size_t n_sentences, std::size_t doc_freq);

/// IDF of a known term under the configured mode:
///  - corrected: standard IDF while n <= N/2, otherwise the epsilon * avgIDF
///    floor (never below zero);
///  - naive: log(N / n);
///  - zero_floor: standard IDF clamped below at zero.
/// Throws StatsError for terms missing from the stats or with corrupt counts.
double term_idf(const std::string& term, const CorpusStats& stats,
                const SimilarityConfig& cfg);

/// Shared distinct tokens over the sum of log sentence lengths; zero when the
/// intersection is empty or both sentences have a single token.
double overlap_similarity(const Sentence& a, const Sentence& b);

/// Length in bytes of the longest common contiguous substring of the
/// lowercased raw texts.
double lcs_similarity(const Sentence& a, const Sentence& b);

/// Classical TF-IDF weights (term count times log(N/n)) over the sentence
/// tokens.
TfIdfVector tfidf_vector(const Sentence& s, const CorpusStats& stats);

/// Cosine of the TF-IDF vectors, in [0,1]; zero if either vector has no norm.
double cosine_tfidf_similarity(const Sentence& a, const Sentence& b,
                               const CorpusStats& stats);

/// Okapi BM25 of sentence `r` rated against the distinct terms of `s`.
double bm25_score(const Sentence& r, const Sentence& s, const CorpusStats& stats,
                  const SimilarityConfig& cfg);

/// BM25+ variant: each matched term additionally contributes idf * delta.
double bm25_plus_score(const Sentence& r, const Sentence& s, const CorpusStats& stats,
                       const SimilarityConfig& cfg);

/// Symmetric edge weight for the configured variant. The asymmetric BM25
/// family is averaged over both directions; results clamp at zero.
double pairwise_weight(const Sentence& a, const Sentence& b, const CorpusStats& stats,
                       const SimilarityConfig& cfg);

const char* to_string(SimilarityVariant v);
const char* to_string(IdfMode m);

/// Parses "overlap", "lcs", "cosine", "bm25", "bm25plus". Throws Error on
/// anything else.
SimilarityVariant variant_from_string(const std::string& name);

/// Parses "corrected", "naive", "zero". Throws Error on anything else.
IdfMode idf_mode_from_string(const std::string& name);

} // namespace textrank
