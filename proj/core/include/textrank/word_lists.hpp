#pragma once

#include <filesystem>
#include <set>
#include <string>

namespace textrank {

/// Embedded default English stopword list (lowercase).
const std::set<std::string>& default_stopwords();

/// Embedded default English abbreviation list for the sentence splitter,
/// stored lowercase with the trailing period ("dr.", "u.s.", ...).
const std::set<std::string>& default_abbreviations();

/// Loads a word list: one entry per line, UTF-8, '#' starts a comment,
/// surrounding whitespace trimmed, empty lines ignored. Entries are
/// lowercased. Throws IoError if the file cannot be read.
std::set<std::string> load_word_list(const std::filesystem::path& path);

} // namespace textrank
