#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace textrank {

/// A document admitted to the pipeline. `text` must be non-empty after
/// whitespace trimming.
struct RawDocument {
    std::string id;
    std::string text;
};

/// One segmented sentence of a document.
///
/// `raw` is a contiguous substring of the document text; `raw_tokens` are the
/// lowercased tokens before any filtering; `tokens` additionally have
/// stopwords removed and stemming applied, per the pipeline configuration.
/// Sentences whose `tokens` fall below the configured minimum never become
/// graph nodes but keep their position in the document.
struct Sentence {
    std::size_t index = 0;
    std::string raw;
    std::vector<std::string> raw_tokens;
    std::vector<std::string> tokens;
    bool graph_eligible = false;
};

struct PipelineConfig {
    bool stopword_removal = true;
    bool stemming = true;
    std::size_t min_sentence_tokens = 1;
    std::set<std::string> stopwords;     // empty -> embedded English default
    std::set<std::string> abbreviations; // empty -> embedded English default
};

/// Splits text into sentences at '.', '!', '?' and paragraph breaks, with an
/// abbreviation list suppressing false splits ("Dr.", "U.S.", ...). Returned
/// sentences carry `index` and `raw` only. Abbreviation entries are matched
/// case-insensitively. Throws EmptyDocumentError on whitespace-only input.
std::vector<Sentence> split_sentences(std::string_view text,
                                      const std::set<std::string>& abbreviations);

/// Overload using the embedded default abbreviation list.
std::vector<Sentence> split_sentences(std::string_view text);

/// Lowercases and tokenizes: alphanumeric runs become tokens, everything else
/// separates. Bytes >= 0x80 are kept verbatim, so UTF-8 words survive without
/// case folding. Purely numeric tokens are retained.
std::vector<std::string> normalize_tokens(std::string_view raw);

/// Order-preserving removal of stopword tokens.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::set<std::string>& stopwords);

/// Full pipeline: split, tokenize, filter and stem per config. Sentences with
/// fewer than `min_sentence_tokens` tokens (or none at all) are flagged as not
/// graph eligible but retained for output ordering.
std::vector<Sentence> preprocess(const RawDocument& doc, const PipelineConfig& cfg);

} // namespace textrank
