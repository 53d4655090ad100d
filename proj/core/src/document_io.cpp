#include "topk/document_io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "topk/error.hpp"

namespace topk {

std::vector<std::string> read_document_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) fail(errc::io_error, dir.string() + " is not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
        if (entry.is_regular_file()) files.push_back(entry.path());
    if (ec) fail(errc::io_error, "cannot list " + dir.string() + ": " + ec.message());
    std::sort(files.begin(), files.end());
    std::vector<std::string> docs;
    docs.reserve(files.size());
    for (const auto& f : files) {
        std::ifstream in(f, std::ios::binary);
        if (!in) fail(errc::io_error, "cannot read " + f.string());
        docs.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return docs;
}

std::vector<std::string> read_document_lines(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot read " + file.string());
    std::vector<std::string> docs;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        docs.push_back(std::move(line));
    }
    return docs;
}

}  // namespace topk
