#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hive/core/types.hpp"

namespace hive::metrics {

// One viewer's playback record for one plan.
struct AnnotationLog {
  std::string viewer_id;
  std::string plan_id;
  std::int64_t total_duration_ms = 0;  // length of the edited clip as served
  std::int64_t normal_play_ms = 0;     // time watched at normal speed
  int interruption_count = 0;          // skips/speedups/abandons during playback
  bool hooked = false;                 // viewer wanted to keep watching at the start
  bool suspense_felt = false;          // ending left the viewer wanting more
};

// 1 - mean pairwise IoU of the plans' source footprints; 1 = fully disjoint.
// Needs at least two plans.
double diversity(const std::vector<EditPlan>& plans);

// Mean uninterrupted viewing span in seconds: (duration/1000) / (1 + interruptions).
double smoothness_seconds(std::int64_t duration_ms, int interruption_count);

// Fraction of the clip watched at normal speed, in [0, 1].
double engagement(std::int64_t normal_play_ms, std::int64_t duration_ms);

// Viewing-experience index: engagement x smoothness.
double vei(double engagement_ratio, double smoothness_s);

enum class JudgmentField { Hooked, SuspenseFelt };

// Fraction of logs answering true for the field. Needs at least one log.
double judgment_rate(const std::vector<AnnotationLog>& logs, JudgmentField field);

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
};

// Source-footprint overlap between a plan and a reference edit:
// precision = |plan n ref| / |plan|, recall = |plan n ref| / |ref|,
// measured in union milliseconds on the source timeline.
PrecisionRecall precision_recall(const EditPlan& plan, const EditPlan& reference);

struct MetricReport {
  int n_plans = 0;
  int n_viewers = 0;
  int n_logs = 0;
  std::optional<double> diversity;       // needs >= 2 plans
  std::optional<double> smoothness_s;    // viewer metrics need >= 1 log
  std::optional<double> engagement;
  std::optional<double> vei;
  std::optional<double> hook_rate;
  std::optional<double> suspense_rate;
  std::optional<double> precision;       // needs a reference edit
  std::optional<double> recall;
};

// Aggregates: per-plan viewer means first, then the mean over plans that have
// logs — so an over-annotated plan cannot dominate. Every log must reference
// one of the given plans. Precision/recall are means over all plans against
// `reference` when given.
MetricReport build_report(const std::vector<EditPlan>& plans,
                          const std::vector<AnnotationLog>& logs,
                          const EditPlan* reference = nullptr);

nlohmann::json report_to_json(const MetricReport& report);

// Fixed-width two-row table (header + values) for terminal output.
std::string render_report_table(const MetricReport& report);

}  // namespace hive::metrics
