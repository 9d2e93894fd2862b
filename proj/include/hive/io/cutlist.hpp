#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hive/core/types.hpp"

namespace hive::io {

struct SourceFile {
  std::string path;
  std::int64_t duration_ms = 0;
};

struct CutListEntry {
  std::string source_path;
  std::int64_t start_ms = 0;
  std::int64_t end_ms = 0;
};

struct ExportResult {
  std::vector<CutListEntry> entries;
  // One ffmpeg trim command (argv vector) per entry, then a final concat
  // command reading concat_manifest from <stem>_concat.txt.
  std::vector<std::vector<std::string>> commands;
  std::string concat_manifest;
  std::string edl_text;  // human-readable cut list
  std::int64_t total_trimmed_ms = 0;
};

// Turns a plan into an executable cut list against real source files. Every
// episode referenced by a cut must be present in `sources` and long enough to
// contain the cut; total_trimmed_ms always equals plan.total_duration_ms.
ExportResult export_cutlist(const EditPlan& plan,
                            const std::map<EpisodeId, SourceFile>& sources,
                            const std::string& output_stem = "edit");

// Loads {sources: {"<episode_id>": {path, duration_ms}}} from JSON.
std::map<EpisodeId, SourceFile> load_sources(const std::filesystem::path& path);

}  // namespace hive::io
