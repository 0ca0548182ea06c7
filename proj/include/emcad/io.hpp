#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace emcad {

// Whole-file read; IoError on failure.
std::string read_text_file(const std::filesystem::path& path);

// Writes to a temporary sibling then renames over `path`, so readers never
// see a partial file. IoError on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace emcad
