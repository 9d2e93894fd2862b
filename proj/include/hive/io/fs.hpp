#pragma once

#include <filesystem>
#include <string>

namespace hive::io {

// Reads a whole file; throws ConfigError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

// Writes via a sibling temp file + rename so readers never observe a torn
// file. Creates parent directories as needed.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace hive::io
