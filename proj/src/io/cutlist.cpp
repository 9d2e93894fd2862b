#include "hive/io/cutlist.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "hive/core/errors.hpp"
#include "hive/io/fs.hpp"

namespace hive::io {

namespace {

// Milliseconds -> "S.mmm" seconds (ffmpeg accepts fractional seconds).
std::string format_seconds(std::int64_t ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld.%03lld", static_cast<long long>(ms / 1000),
                static_cast<long long>(ms % 1000));
  return buf;
}

// Milliseconds -> "HH:MM:SS.mmm" for the human-readable cut list.
std::string format_timecode(std::int64_t ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%02lld:%02lld:%02lld.%03lld",
                static_cast<long long>(ms / 3600000), static_cast<long long>(ms / 60000 % 60),
                static_cast<long long>(ms / 1000 % 60), static_cast<long long>(ms % 1000));
  return buf;
}

std::string segment_name(const std::string& stem, std::size_t ordinal) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "_seg%03zu.mp4", ordinal);
  return stem + buf;
}

}  // namespace

ExportResult export_cutlist(const EditPlan& plan, const std::map<EpisodeId, SourceFile>& sources,
                            const std::string& output_stem) {
  if (plan.cuts.empty()) {
    throw ValidationError("export: plan " + plan.plan_id + " has no cuts");
  }
  ExportResult result;
  std::ostringstream edl;
  std::ostringstream concat;

  for (std::size_t i = 0; i < plan.cuts.size(); ++i) {
    const auto& cut = plan.cuts[i];
    const auto src = sources.find(cut.episode_id);
    if (src == sources.end()) {
      std::ostringstream os;
      os << "export: no source file for episode " << cut.episode_id;
      throw ValidationError(os.str());
    }
    if (!cut.valid()) {
      std::ostringstream os;
      os << "export: cut " << i << " of plan " << plan.plan_id << " is not a valid interval";
      throw ValidationError(os.str());
    }
    if (cut.end_ms > src->second.duration_ms) {
      std::ostringstream os;
      os << "export: cut " << i << " ends at " << cut.end_ms << "ms but "
         << src->second.path << " lasts only " << src->second.duration_ms << "ms";
      throw ValidationError(os.str());
    }

    result.entries.push_back({src->second.path, cut.start_ms, cut.end_ms});
    result.total_trimmed_ms += cut.duration_ms();

    const std::string segment = segment_name(output_stem, i + 1);
    result.commands.push_back({"ffmpeg", "-y", "-ss", format_seconds(cut.start_ms), "-to",
                               format_seconds(cut.end_ms), "-i", src->second.path, "-c", "copy",
                               segment});
    concat << "file '" << segment << "'\n";

    char row[64];
    std::snprintf(row, sizeof(row), "%03zu  ", i + 1);
    edl << row << src->second.path << "  " << format_timecode(cut.start_ms) << " - "
        << format_timecode(cut.end_ms) << "  (" << format_seconds(cut.duration_ms()) << " s)\n";
  }

  if (result.total_trimmed_ms != plan.total_duration_ms) {
    std::ostringstream os;
    os << "export: trimmed length " << result.total_trimmed_ms
       << "ms does not match the plan total " << plan.total_duration_ms << "ms";
    throw ValidationError(os.str());
  }

  result.concat_manifest = concat.str();
  result.commands.push_back({"ffmpeg", "-y", "-f", "concat", "-safe", "0", "-i",
                             output_stem + "_concat.txt", "-c", "copy", output_stem + ".mp4"});
  result.edl_text = edl.str();
  return result;
}

std::map<EpisodeId, SourceFile> load_sources(const std::filesystem::path& path) {
  const std::string origin = path.string();
  const nlohmann::json doc =
      nlohmann::json::parse(read_file(path), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ParseError(ParseErrorKind::Malformed, "sources file " + origin + " is not valid JSON");
  }
  if (!doc.is_object() || !doc.contains("sources") || !doc["sources"].is_object() ||
      doc["sources"].empty()) {
    throw ValidationError("sources file " + origin + ": needs a non-empty sources object");
  }

  std::map<EpisodeId, SourceFile> sources;
  for (const auto& [key, value] : doc["sources"].items()) {
    EpisodeId episode_id = 0;
    try {
      std::size_t consumed = 0;
      episode_id = std::stoi(key, &consumed);
      if (consumed != key.size()) {
        episode_id = 0;
      }
    } catch (const std::exception&) {
      episode_id = 0;
    }
    if (episode_id <= 0) {
      throw ValidationError("sources file " + origin + ": key \"" + key +
                            "\" is not a positive episode id");
    }
    if (!value.is_object() || !value.contains("path") || !value["path"].is_string() ||
        !value.contains("duration_ms") || !value["duration_ms"].is_number_integer() ||
        value["duration_ms"].get<std::int64_t>() <= 0) {
      throw ValidationError("sources file " + origin + ": /sources/" + key +
                            " needs {path: string, duration_ms: positive int}");
    }
    sources[episode_id] = {value["path"].get<std::string>(),
                           value["duration_ms"].get<std::int64_t>()};
  }
  return sources;
}

}  // namespace hive::io
