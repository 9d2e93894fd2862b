#include "hive/understanding/scene_segmentation.hpp"

#include <sstream>

#include "hive/core/errors.hpp"
#include "hive/core/log.hpp"
#include "hive/understanding/result_block.hpp"

namespace hive::understanding {

SegmentationResult segment_scenes(EpisodeId episode_id,
                                  const std::vector<std::int64_t>& shot_boundaries,
                                  providers::ShotFusionClassifier& classifier,
                                  providers::LlmProvider& llm, const PromptContext& ctx) {
  if (shot_boundaries.size() < 2) {
    throw ValidationError("segment_scenes: need at least two shot boundaries");
  }
  for (std::size_t i = 0; i + 1 < shot_boundaries.size(); ++i) {
    if (shot_boundaries[i] >= shot_boundaries[i + 1]) {
      throw ValidationError("segment_scenes: shot boundaries must be strictly increasing");
    }
  }

  // Stage 2: pairwise fusion over adjacent shots. keep_cut[i] is the interior
  // boundary between shot i and shot i+1 (0-based shots).
  const std::size_t n_shots = shot_boundaries.size() - 1;
  std::vector<bool> keep_cut(n_shots >= 1 ? n_shots - 1 : 0, true);
  for (std::size_t i = 0; i + 1 < n_shots; ++i) {
    if (classifier.same_scene(episode_id, static_cast<int>(i))) {
      keep_cut[i] = false;
    }
  }

  std::vector<TimeInterval> segments;
  std::int64_t seg_start = shot_boundaries.front();
  for (std::size_t i = 0; i < n_shots; ++i) {
    const bool last_shot = (i + 1 == n_shots);
    if (last_shot || keep_cut[i]) {
      segments.push_back({episode_id, seg_start, shot_boundaries[i + 1]});
      if (!last_shot) {
        seg_start = shot_boundaries[i + 1];
      }
    }
  }

  // Stage 3: LLM refinement over the stage-2 segments.
  SegmentationResult out;
  std::vector<bool> merge_after(segments.size() >= 1 ? segments.size() - 1 : 0, false);
  if (segments.size() > 1) {
    const auto request = prompts::scene_refinement(ctx, episode_id, segments);
    static const std::vector<FieldSpec> schema = {
        {"first", FieldKind::Integer},
        {"second", FieldKind::Integer},
        {"thought", FieldKind::String, /*required=*/false},
    };
    const ResultBlock block = call_for_records(llm, request, schema);
    for (const auto& rec : block.records) {
      const auto first = rec.at("first").get<std::int64_t>();
      const auto second = rec.at("second").get<std::int64_t>();
      const bool in_range = first >= 1 && second >= 2 &&
                            second <= static_cast<std::int64_t>(segments.size());
      if (!in_range || second != first + 1) {
        std::ostringstream os;
        os << "ignoring refinement directive (" << first << ", " << second
           << "): segments must be adjacent and within 1.." << segments.size();
        log::warn(os.str());
        ++out.skipped_directives;
        continue;
      }
      merge_after[static_cast<std::size_t>(first) - 1] = true;
    }
  }

  out.boundaries.push_back(segments.front().start_ms);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const bool last = (i + 1 == segments.size());
    if (last || !merge_after[i]) {
      out.boundaries.push_back(segments[i].end_ms);
    }
  }
  return out;
}

}  // namespace hive::understanding
