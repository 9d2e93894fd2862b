#include "hive/io/annotations.hpp"

#include <sstream>

#include "json.hpp"

#include "hive/core/errors.hpp"
#include "hive/io/fs.hpp"

namespace hive::io {

namespace {

using nlohmann::json;

metrics::AnnotationLog parse_log_line(const std::string& line, std::size_t line_no,
                                      const std::string& origin) {
  std::ostringstream at;
  at << "annotation logs " << origin << " line " << line_no;
  const json doc = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ParseError(ParseErrorKind::Malformed, at.str() + " is not valid JSON");
  }
  if (!doc.is_object()) {
    throw ValidationError(at.str() + ": must be a JSON object");
  }
  auto str = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_string()) {
      throw ValidationError(at.str() + ": \"" + key + "\" must be a string");
    }
    return doc[key].get<std::string>();
  };
  auto integer = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
      throw ValidationError(at.str() + ": \"" + key + "\" must be an integer");
    }
    return doc[key].get<std::int64_t>();
  };
  auto boolean = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_boolean()) {
      throw ValidationError(at.str() + ": \"" + key + "\" must be a boolean");
    }
    return doc[key].get<bool>();
  };

  metrics::AnnotationLog log;
  log.viewer_id = str("viewer_id");
  log.plan_id = str("plan_id");
  log.total_duration_ms = integer("total_duration_ms");
  log.normal_play_ms = integer("normal_play_ms");
  log.interruption_count = static_cast<int>(integer("interruption_count"));
  log.hooked = boolean("hooked");
  log.suspense_felt = boolean("suspense_felt");
  if (log.total_duration_ms <= 0) {
    throw ValidationError(at.str() + ": total_duration_ms must be positive");
  }
  if (log.normal_play_ms < 0 || log.normal_play_ms > log.total_duration_ms) {
    throw ValidationError(at.str() + ": normal_play_ms must lie in [0, total_duration_ms]");
  }
  if (log.interruption_count < 0) {
    throw ValidationError(at.str() + ": interruption_count must be non-negative");
  }
  return log;
}

}  // namespace

std::vector<metrics::AnnotationLog> annotation_logs_from_text(const std::string& text,
                                                              const std::string& origin) {
  std::vector<metrics::AnnotationLog> logs;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    logs.push_back(parse_log_line(line, line_no, origin));
  }
  return logs;
}

std::vector<metrics::AnnotationLog> load_annotation_logs(const std::filesystem::path& path) {
  return annotation_logs_from_text(read_file(path), path.string());
}

void save_annotation_logs(const std::vector<metrics::AnnotationLog>& logs,
                          const std::filesystem::path& path) {
  std::ostringstream os;
  for (const auto& log : logs) {
    const json doc{{"viewer_id", log.viewer_id},
                   {"plan_id", log.plan_id},
                   {"total_duration_ms", log.total_duration_ms},
                   {"normal_play_ms", log.normal_play_ms},
                   {"interruption_count", log.interruption_count},
                   {"hooked", log.hooked},
                   {"suspense_felt", log.suspense_felt}};
    os << doc.dump() << "\n";
  }
  write_file_atomic(path, os.str());
}

}  // namespace hive::io
