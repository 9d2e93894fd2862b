#pragma once

#include <cstddef>
#include <vector>

#include "hive/core/types.hpp"
#include "hive/editing/prompts.hpp"
#include "hive/editing/rules.hpp"
#include "hive/providers/provider.hpp"

namespace hive::editing {

struct EditOptions {
  int top_k = 3;                  // clips to expand; clamped to the clip count
  bool highlight_detection = true;  // off: every scene is an opening/ending candidate
  bool boundary_selection = true;   // off: all candidates accepted without an LLM call
  bool pruning = true;              // off: windows are spliced whole
  bool allow_cross_episode_clips = true;
  std::size_t chunk_budget_chars = 0;  // scoring roster budget, 0 = one chunk
};

struct EditOutcome {
  std::vector<EditPlan> plans;               // plan_0001, plan_0002, ... in window order
  SceneSequence scored;                      // scenes with final scores/roles
  std::vector<HighlightClip> clips;          // all merged clips, sorted
  std::vector<int> defaulted_scene_indices;  // scenes the scoring reply omitted
  int skipped_clips = 0;                     // clips dropped for lacking openings/endings
};

// Full highlight-driven editing pass: score -> merge clips -> per top-k clip
// select openings/endings -> enumerate deduplicated windows -> prune -> splice.
// Throws EmptyHighlightsError when no scene scores positive and
// NoWindowsError when every top clip is skipped.
EditOutcome edit(const SceneSequence& video, const HighlightRuleSet& rules,
                 providers::LlmProvider& llm, const PromptContext& ctx,
                 const EditOptions& options = {});

}  // namespace hive::editing
