#include "textrank/io.hpp"

#include "textrank/errors.hpp"

#include <fstream>
#include <sstream>

namespace textrank {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("error while reading file: " + path.string());
    return std::move(buffer).str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write file: " + path.string());
    out << content;
    if (!out)
        throw IoError("error while writing file: " + path.string());
}

} // namespace textrank
