#include "hive/io/fs.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "hive/core/errors.hpp"

namespace hive::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open file: " + path.string());
  }
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) {
    throw ConfigError("error while reading file: " + path.string());
  }
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path parent = path.parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    fs::create_directories(parent, ec);
    if (ec) {
      throw ConfigError("cannot create directory " + parent.string() + ": " + ec.message());
    }
  }
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ConfigError("cannot open file for writing: " + tmp.string());
    }
    out << content;
    out.flush();
    if (!out) {
      throw ConfigError("error while writing file: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ConfigError("cannot move " + tmp.string() + " into place: " + ec.message());
  }
}

}  // namespace hive::io
