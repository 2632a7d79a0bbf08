#pragma once

#include <filesystem>
#include <string>

namespace textrank {

/// Reads a whole file as bytes. Throws IoError when unreadable.
std::string read_text_file(const std::filesystem::path& path);

/// Writes bytes to a file, replacing it. Throws IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace textrank
