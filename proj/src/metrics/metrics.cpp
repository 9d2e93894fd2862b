#include "hive/metrics/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "hive/core/errors.hpp"
#include "hive/core/intervals.hpp"

namespace hive::metrics {

namespace {

void validate_log(const AnnotationLog& log) {
  if (log.total_duration_ms <= 0) {
    throw ValidationError("annotation log " + log.viewer_id + "/" + log.plan_id +
                          ": total_duration_ms must be positive");
  }
  if (log.normal_play_ms < 0 || log.normal_play_ms > log.total_duration_ms) {
    throw ValidationError("annotation log " + log.viewer_id + "/" + log.plan_id +
                          ": normal_play_ms must lie in [0, total_duration_ms]");
  }
  if (log.interruption_count < 0) {
    throw ValidationError("annotation log " + log.viewer_id + "/" + log.plan_id +
                          ": interruption_count must be non-negative");
  }
}

double mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (const double v : values) {
    sum += v;
  }
  return sum / static_cast<double>(values.size());
}

}  // namespace

double diversity(const std::vector<EditPlan>& plans) {
  const std::size_t n = plans.size();
  if (n < 2) {
    throw ValidationError("diversity: needs at least two plans");
  }
  for (const auto& plan : plans) {
    if (plan.cuts.empty()) {
      throw ValidationError("diversity: plan " + plan.plan_id + " has no cuts");
    }
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sum += intervals::interval_iou(plans[i].cuts, plans[j].cuts);
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return 1.0 - sum / pairs;
}

double smoothness_seconds(std::int64_t duration_ms, int interruption_count) {
  if (duration_ms <= 0) {
    throw ValidationError("smoothness: duration must be positive");
  }
  if (interruption_count < 0) {
    throw ValidationError("smoothness: interruption count must be non-negative");
  }
  return (static_cast<double>(duration_ms) / 1000.0) /
         (1.0 + static_cast<double>(interruption_count));
}

double engagement(std::int64_t normal_play_ms, std::int64_t duration_ms) {
  if (duration_ms <= 0) {
    throw ValidationError("engagement: duration must be positive");
  }
  if (normal_play_ms < 0 || normal_play_ms > duration_ms) {
    throw ValidationError("engagement: normal play time must lie in [0, duration]");
  }
  return static_cast<double>(normal_play_ms) / static_cast<double>(duration_ms);
}

double vei(double engagement_ratio, double smoothness_s) {
  if (engagement_ratio < 0.0 || smoothness_s < 0.0) {
    throw ValidationError("vei: inputs must be non-negative");
  }
  return engagement_ratio * smoothness_s;
}

double judgment_rate(const std::vector<AnnotationLog>& logs, JudgmentField field) {
  if (logs.empty()) {
    throw ValidationError("judgment_rate: needs at least one log");
  }
  std::size_t yes = 0;
  for (const auto& log : logs) {
    const bool value = field == JudgmentField::Hooked ? log.hooked : log.suspense_felt;
    yes += value ? 1 : 0;
  }
  return static_cast<double>(yes) / static_cast<double>(logs.size());
}

PrecisionRecall precision_recall(const EditPlan& plan, const EditPlan& reference) {
  if (plan.cuts.empty() || reference.cuts.empty()) {
    throw ValidationError("precision_recall: both edits need at least one cut");
  }
  const auto intersection = intervals::intersect(plan.cuts, reference.cuts);
  const double shared = static_cast<double>(intervals::union_duration_ms(intersection));
  const double plan_len = static_cast<double>(intervals::union_duration_ms(plan.cuts));
  const double ref_len = static_cast<double>(intervals::union_duration_ms(reference.cuts));
  return {shared / plan_len, shared / ref_len};
}

MetricReport build_report(const std::vector<EditPlan>& plans,
                          const std::vector<AnnotationLog>& logs, const EditPlan* reference) {
  if (plans.empty()) {
    throw ValidationError("build_report: needs at least one plan");
  }
  std::set<std::string> plan_ids;
  for (const auto& plan : plans) {
    if (!plan_ids.insert(plan.plan_id).second) {
      throw ValidationError("build_report: duplicate plan id " + plan.plan_id);
    }
  }

  MetricReport report;
  report.n_plans = static_cast<int>(plans.size());
  report.n_logs = static_cast<int>(logs.size());
  {
    std::set<std::string> viewers;
    for (const auto& log : logs) {
      viewers.insert(log.viewer_id);
    }
    report.n_viewers = static_cast<int>(viewers.size());
  }

  if (plans.size() >= 2) {
    report.diversity = diversity(plans);
  }

  std::map<std::string, std::vector<AnnotationLog>> by_plan;
  for (const auto& log : logs) {
    if (!plan_ids.count(log.plan_id)) {
      throw ValidationError("build_report: log references unknown plan " + log.plan_id);
    }
    validate_log(log);
    by_plan[log.plan_id].push_back(log);
  }

  if (!by_plan.empty()) {
    std::vector<double> plan_engagement, plan_smoothness, plan_vei, plan_hook, plan_suspense;
    for (const auto& plan : plans) {
      const auto it = by_plan.find(plan.plan_id);
      if (it == by_plan.end()) {
        continue;  // plans nobody watched don't contribute to viewer metrics
      }
      std::vector<double> e, s, v;
      for (const auto& log : it->second) {
        const double le = engagement(log.normal_play_ms, log.total_duration_ms);
        const double ls = smoothness_seconds(log.total_duration_ms, log.interruption_count);
        e.push_back(le);
        s.push_back(ls);
        v.push_back(vei(le, ls));
      }
      plan_engagement.push_back(mean(e));
      plan_smoothness.push_back(mean(s));
      plan_vei.push_back(mean(v));
      plan_hook.push_back(judgment_rate(it->second, JudgmentField::Hooked));
      plan_suspense.push_back(judgment_rate(it->second, JudgmentField::SuspenseFelt));
    }
    report.engagement = mean(plan_engagement);
    report.smoothness_s = mean(plan_smoothness);
    report.vei = mean(plan_vei);
    report.hook_rate = mean(plan_hook);
    report.suspense_rate = mean(plan_suspense);
  }

  if (reference != nullptr) {
    std::vector<double> precisions, recalls;
    for (const auto& plan : plans) {
      const auto pr = precision_recall(plan, *reference);
      precisions.push_back(pr.precision);
      recalls.push_back(pr.recall);
    }
    report.precision = mean(precisions);
    report.recall = mean(recalls);
  }
  return report;
}

nlohmann::json report_to_json(const MetricReport& report) {
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return nlohmann::json{{"format_version", 1},
                        {"n_plans", report.n_plans},
                        {"n_viewers", report.n_viewers},
                        {"n_logs", report.n_logs},
                        {"diversity", opt(report.diversity)},
                        {"smoothness_s", opt(report.smoothness_s)},
                        {"engagement", opt(report.engagement)},
                        {"vei", opt(report.vei)},
                        {"hook_rate", opt(report.hook_rate)},
                        {"suspense_rate", opt(report.suspense_rate)},
                        {"precision", opt(report.precision)},
                        {"recall", opt(report.recall)}};
}

std::string render_report_table(const MetricReport& report) {
  struct Column {
    const char* name;
    const std::optional<double>* value;
  };
  const Column columns[] = {
      {"Diversity", &report.diversity},   {"Smoothness(s)", &report.smoothness_s},
      {"Engagement", &report.engagement}, {"VEI", &report.vei},
      {"HookRate", &report.hook_rate},    {"SuspenseRate", &report.suspense_rate},
      {"Precision", &report.precision},   {"Recall", &report.recall},
  };

  std::ostringstream header, row;
  for (const auto& col : columns) {
    char cell[32];
    std::snprintf(cell, sizeof(cell), " %13s", col.name);
    header << cell;
    if (col.value->has_value()) {
      std::snprintf(cell, sizeof(cell), " %13.4f", **col.value);
    } else {
      std::snprintf(cell, sizeof(cell), " %13s", "-");
    }
    row << cell;
  }
  return header.str() + "\n" + row.str() + "\n";
}

}  // namespace hive::metrics
