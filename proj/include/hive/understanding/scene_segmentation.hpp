#pragma once

#include <cstdint>
#include <vector>

#include "hive/core/types.hpp"
#include "hive/providers/provider.hpp"
#include "hive/understanding/prompts.hpp"

namespace hive::understanding {

struct SegmentationResult {
  // Scene boundaries in ms: boundaries[0] == shot_boundaries.front(),
  // boundaries.back() == shot_boundaries.back(); every value is one of the
  // input shot boundaries, and consecutive pairs delimit the scenes.
  std::vector<std::int64_t> boundaries;
  int skipped_directives = 0;  // refinement directives ignored as non-adjacent/out of range
};

// Three-stage scene segmentation of one episode:
//   1. adopt the detected shot boundaries as candidate cuts;
//   2. merge adjacent shots the pairwise fusion classifier deems same-scene
//      (transitively);
//   3. apply LLM refinement directives {first, second}, each merging two
//      adjacent stage-2 segments (1-based, second == first + 1); any other
//      directive is ignored with a warning and counted in skipped_directives.
//
// shot_boundaries must hold at least two strictly increasing timestamps.
SegmentationResult segment_scenes(EpisodeId episode_id,
                                  const std::vector<std::int64_t>& shot_boundaries,
                                  providers::ShotFusionClassifier& classifier,
                                  providers::LlmProvider& llm, const PromptContext& ctx);

}  // namespace hive::understanding
