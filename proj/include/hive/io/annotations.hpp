#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hive/metrics/metrics.hpp"

namespace hive::io {

// Annotation logs are stored as JSONL: one viewer/plan record per line,
// {viewer_id, plan_id, total_duration_ms, normal_play_ms, interruption_count,
//  hooked, suspense_felt}. Blank lines are ignored.
std::vector<metrics::AnnotationLog> load_annotation_logs(const std::filesystem::path& path);
std::vector<metrics::AnnotationLog> annotation_logs_from_text(const std::string& text,
                                                              const std::string& origin);
void save_annotation_logs(const std::vector<metrics::AnnotationLog>& logs,
                          const std::filesystem::path& path);

}  // namespace hive::io
