#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace topk {

/// One document per regular file in `dir`, ordered by file name.
std::vector<std::string> read_document_directory(const std::filesystem::path& dir);

/// One document per line of `file` (a trailing '\r' is stripped).
std::vector<std::string> read_document_lines(const std::filesystem::path& file);

}  // namespace topk
