#include "textrank/word_lists.hpp"

#include "textrank/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace textrank {
namespace {

const char* const kStopwords[] = {
    "a", "about", "above", "after", "again", "against", "ain", "all", "am",
    "an", "and", "any", "are", "aren", "as", "at", "be", "because", "been",
    "before", "being", "below", "between", "both", "but", "by", "can",
    "couldn", "d", "did", "didn", "do", "does", "doesn", "doing", "don",
    "down", "during", "each", "few", "for", "from", "further", "had", "hadn",
    "has", "hasn", "have", "haven", "having", "he", "her", "here", "hers",
    "herself", "him", "himself", "his", "how", "i", "if", "in", "into", "is",
    "isn", "it", "its", "itself", "just", "ll", "m", "ma", "me", "mightn",
    "more", "most", "mustn", "my", "myself", "needn", "no", "nor", "not",
    "now", "o", "of", "off", "on", "once", "only", "or", "other", "our",
    "ours", "ourselves", "out", "over", "own", "re", "s", "same", "shan",
    "she", "should", "shouldn", "so", "some", "such", "t", "than", "that",
    "the", "their", "theirs", "them", "themselves", "then", "there", "these",
    "they", "this", "those", "through", "to", "too", "under", "until", "up",
    "ve", "very", "was", "wasn", "we", "were", "weren", "what", "when",
    "where", "which", "while", "who", "whom", "why", "will", "with", "won",
    "wouldn", "y", "you", "your", "yours", "yourself", "yourselves",
};

// Trailing-period entries only; matched against the lowercased word in front
// of a candidate period. Single letters cover personal initials.
const char* const kAbbreviations[] = {
    "mr.", "mrs.", "ms.", "dr.", "prof.", "rev.", "gen.", "sen.", "rep.",
    "gov.", "col.", "capt.", "lt.", "sgt.", "maj.", "hon.", "st.", "jr.",
    "sr.", "messrs.", "pres.", "supt.", "det.", "insp.", "vs.", "etc.",
    "e.g.", "i.e.", "cf.", "al.", "inc.", "ltd.", "co.", "corp.", "dept.",
    "univ.", "assn.", "bros.", "no.", "nos.", "fig.", "figs.", "vol.",
    "vols.", "pp.", "ch.", "sec.", "art.", "ed.", "eds.", "est.", "jan.",
    "feb.", "mar.", "apr.", "jun.", "jul.", "aug.", "sep.", "sept.", "oct.",
    "nov.", "dec.", "mon.", "tue.", "tues.", "wed.", "thu.", "thur.",
    "thurs.", "fri.", "sat.", "sun.", "u.s.", "u.k.", "u.n.", "d.c.",
    "a.m.", "p.m.", "a.d.", "b.c.", "ph.d.", "b.a.", "m.a.", "b.sc.",
    "m.sc.", "mt.", "ave.", "blvd.", "rd.", "hwy.",
    "a.", "b.", "c.", "d.", "e.", "f.", "g.", "h.", "i.", "j.", "k.", "l.",
    "m.", "n.", "o.", "p.", "q.", "r.", "s.", "t.", "u.", "v.", "w.", "x.",
    "y.", "z.",
};

std::string trim_and_lower(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
    const auto is_ws = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!line.empty() && is_ws(static_cast<unsigned char>(line.back())))
        line.pop_back();
    std::size_t begin = 0;
    while (begin < line.size() && is_ws(static_cast<unsigned char>(line[begin])))
        ++begin;
    line.erase(0, begin);
    std::transform(line.begin(), line.end(), line.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return line;
}

} // namespace

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words(std::begin(kStopwords), std::end(kStopwords));
    return words;
}

const std::set<std::string>& default_abbreviations() {
    static const std::set<std::string> words(std::begin(kAbbreviations),
                                             std::end(kAbbreviations));
    return words;
}

std::set<std::string> load_word_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open word list: " + path.string());
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto entry = trim_and_lower(std::move(line));
        if (!entry.empty())
            words.insert(std::move(entry));
        line.clear();
    }
    return words;
}

} // namespace textrank
