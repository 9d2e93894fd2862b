#include "hive/editing/end2end.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "hive/core/errors.hpp"
#include "hive/core/intervals.hpp"
#include "hive/core/log.hpp"
#include "hive/understanding/result_block.hpp"

namespace hive::editing {

namespace {

using understanding::call_for_records;
using understanding::FieldKind;
using understanding::FieldSpec;

EditPlan narration_baseline(const SceneSequence& video, const HighlightRuleSet& rules,
                            providers::LlmProvider& llm, const PromptContext& ctx) {
  for (const auto& scene : video.scenes()) {
    if (scene.narration.empty()) {
      throw ValidationError("end2end_edit: every scene needs a narration in Narration mode");
    }
  }
  static const std::vector<FieldSpec> schema = {
      {"episode", FieldKind::Integer},
      {"scene_id", FieldKind::Integer},
      {"thought", FieldKind::String, /*required=*/false},
  };
  const auto request = prompts::end2end_narration(ctx, rules, video.scenes());
  const auto block = call_for_records(llm, request, schema);

  std::set<int> kept;
  for (const auto& rec : block.records) {
    const int episode = rec.at("episode").get<int>();
    const int scene_id = rec.at("scene_id").get<int>();
    const auto global = video.find(episode, scene_id);
    if (!global) {
      std::ostringstream os;
      os << "end2end reply names unknown scene (episode " << episode << ", scene " << scene_id
         << "); discarded";
      log::warn(os.str());
      continue;
    }
    kept.insert(*global);
  }
  if (kept.empty()) {
    throw ValidationError("end2end_edit: the reply kept no known scene");
  }

  EditPlan plan;
  for (const int g : kept) {
    plan.cuts.push_back(video.at(g).interval);
  }
  for (const auto& cut : plan.cuts) {
    plan.total_duration_ms += cut.duration_ms();
  }
  plan.provenance.kind = "end2end_narration";
  return plan;
}

EditPlan asr_baseline(const SceneSequence& video, const std::vector<DialogueLine>& transcript,
                      const HighlightRuleSet& rules, providers::LlmProvider& llm,
                      const PromptContext& ctx) {
  if (transcript.empty()) {
    throw ValidationError("end2end_edit: ASR mode needs a non-empty transcript");
  }
  // Episode extents for clamping replied spans.
  std::map<EpisodeId, std::int64_t> extent;
  for (const auto& scene : video.scenes()) {
    auto& end = extent[scene.episode_id];
    end = std::max(end, scene.interval.end_ms);
  }

  static const std::vector<FieldSpec> schema = {
      {"episode", FieldKind::Integer},
      {"start_time", FieldKind::Number, /*required=*/true, 0.0},
      {"end_time", FieldKind::Number, /*required=*/true, 0.0},
      {"thought", FieldKind::String, /*required=*/false},
  };
  const auto request = prompts::end2end_asr(ctx, rules, transcript);
  const auto block = call_for_records(llm, request, schema);

  std::vector<TimeInterval> spans;
  for (std::size_t r = 0; r < block.records.size(); ++r) {
    const auto& rec = block.records[r];
    const int episode = rec.at("episode").get<int>();
    const double start_s = rec.at("start_time").get<double>();
    const double end_s = rec.at("end_time").get<double>();
    if (end_s <= start_s) {
      std::ostringstream os;
      os << "span end_time " << end_s << " not after start_time " << start_s;
      throw ParseError(ParseErrorKind::SchemaViolation, os.str(), r);
    }
    const auto it = extent.find(episode);
    if (it == extent.end()) {
      std::ostringstream os;
      os << "span for unknown episode " << episode << " discarded";
      log::warn(os.str());
      continue;
    }
    const auto start_ms = std::max<std::int64_t>(0, std::llround(start_s * 1000.0));
    const auto end_ms = std::min<std::int64_t>(it->second, std::llround(end_s * 1000.0));
    if (start_ms >= end_ms) {
      std::ostringstream os;
      os << "span [" << start_s << ", " << end_s << "] of episode " << episode
         << " is empty after clamping to the episode extent; discarded";
      log::warn(os.str());
      continue;
    }
    spans.push_back({episode, start_ms, end_ms});
  }
  if (spans.empty()) {
    throw ValidationError("end2end_edit: no usable span in the reply");
  }

  EditPlan plan;
  plan.cuts = intervals::coalesce(spans);
  if (plan.cuts.size() != spans.size()) {
    std::ostringstream os;
    os << "end2end reply contained overlapping or touching spans; merged " << spans.size()
       << " into " << plan.cuts.size();
    log::warn(os.str());
  }
  for (const auto& cut : plan.cuts) {
    plan.total_duration_ms += cut.duration_ms();
  }
  plan.provenance.kind = "end2end_asr";
  return plan;
}

}  // namespace

EditPlan end2end_edit(const SceneSequence& video, const std::vector<DialogueLine>& transcript,
                      const HighlightRuleSet& rules, providers::LlmProvider& llm,
                      const PromptContext& ctx, End2EndMode mode) {
  if (video.empty()) {
    throw ValidationError("end2end_edit: no scenes");
  }
  EditPlan plan = mode == End2EndMode::Narration
                      ? narration_baseline(video, rules, llm, ctx)
                      : asr_baseline(video, transcript, rules, llm, ctx);
  plan.plan_id = "plan_0001";
  return plan;
}

}  // namespace hive::editing
