#include "textrank/text_pipeline.hpp"

#include "textrank/errors.hpp"
#include "textrank/porter_stemmer.hpp"
#include "textrank/word_lists.hpp"

#include <algorithm>
#include <cctype>

namespace textrank {
namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_terminator(char c) {
    return c == '.' || c == '!' || c == '?';
}

// quote/bracket characters allowed between a terminator and the break
bool is_closing(char c) {
    return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

// The whitespace-delimited word ending at the period, lowercased, with any
// leading punctuation ("(", quotes) stripped: "(Dr." -> "dr."
std::string word_before_period(std::string_view text, std::size_t period,
                               std::size_t floor) {
    std::size_t wstart = period;
    while (wstart > floor && !is_space(text[wstart - 1]))
        --wstart;
    while (wstart < period &&
           !(std::isalnum(static_cast<unsigned char>(text[wstart])) ||
             static_cast<unsigned char>(text[wstart]) >= 0x80))
        ++wstart;
    return ascii_lower(text.substr(wstart, period - wstart + 1));
}

} // namespace

std::vector<Sentence> split_sentences(std::string_view text,
                                      const std::set<std::string>& abbreviations) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t start = 0;

    auto flush = [&](std::size_t end) {
        std::size_t s = start;
        while (s < end && is_space(text[s]))
            ++s;
        std::size_t e = end;
        while (e > s && is_space(text[e - 1]))
            --e;
        if (e > s)
            spans.emplace_back(s, e);
    };

    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        const char c = text[i];
        if (is_terminator(c)) {
            std::size_t run_end = i;
            while (run_end + 1 < n && is_terminator(text[run_end + 1]))
                ++run_end;
            std::size_t close_end = run_end;
            while (close_end + 1 < n && is_closing(text[close_end + 1]))
                ++close_end;
            bool boundary = close_end + 1 >= n || is_space(text[close_end + 1]);
            if (boundary && c == '.' && run_end == i &&
                abbreviations.count(word_before_period(text, i, start)) > 0)
                boundary = false;
            if (boundary) {
                flush(close_end + 1);
                start = close_end + 1;
                i = start;
            } else {
                i = run_end + 1;
            }
            continue;
        }
        if (is_space(c)) {
            std::size_t j = i;
            int newlines = 0;
            while (j < n && is_space(text[j])) {
                if (text[j] == '\n')
                    ++newlines;
                ++j;
            }
            if (newlines >= 2) { // blank line: paragraph break
                flush(i);
                start = j;
            }
            i = j;
            continue;
        }
        ++i;
    }
    flush(n);

    if (spans.empty())
        throw EmptyDocumentError("document is empty or whitespace-only");

    std::vector<Sentence> sentences;
    sentences.reserve(spans.size());
    for (std::size_t k = 0; k < spans.size(); ++k) {
        Sentence s;
        s.index = k;
        s.raw.assign(text.substr(spans[k].first, spans[k].second - spans[k].first));
        sentences.push_back(std::move(s));
    }
    return sentences;
}

std::vector<Sentence> split_sentences(std::string_view text) {
    return split_sentences(text, default_abbreviations());
}

std::vector<std::string> normalize_tokens(std::string_view raw) {
    std::vector<std::string> tokens;
    std::string current;
    for (const char c : raw) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc) || uc >= 0x80) {
            current.push_back(static_cast<char>(std::tolower(uc)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty())
        tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::set<std::string>& stopwords) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const auto& t : tokens)
        if (stopwords.count(t) == 0)
            kept.push_back(t);
    return kept;
}

std::vector<Sentence> preprocess(const RawDocument& doc, const PipelineConfig& cfg) {
    const auto& abbr = cfg.abbreviations.empty() ? default_abbreviations() : cfg.abbreviations;
    const auto& stop = cfg.stopwords.empty() ? default_stopwords() : cfg.stopwords;

    auto sentences = split_sentences(doc.text, abbr);
    for (auto& s : sentences) {
        s.raw_tokens = normalize_tokens(s.raw);
        s.tokens = cfg.stopword_removal ? remove_stopwords(s.raw_tokens, stop) : s.raw_tokens;
        if (cfg.stemming)
            for (auto& t : s.tokens)
                t = porter_stem(t);
        s.graph_eligible = !s.tokens.empty() && s.tokens.size() >= cfg.min_sentence_tokens;
    }
    return sentences;
}

} // namespace textrank
