#pragma once

#include <string>
#include <vector>

#include "hive/core/types.hpp"
#include "hive/editing/rules.hpp"
#include "hive/providers/provider.hpp"
#include "hive/understanding/prompts.hpp"

namespace hive::editing {

using understanding::PromptContext;

namespace prompts {

// Per-scene highlight scoring over a chunk of the roster; reply contract is a
// <result> array of {episode, scene_id, reason, score} records. context_scenes
// (already-scored earlier scenes) are rendered before the scenes under
// evaluation for continuity.
providers::LlmRequest highlight_scoring(const PromptContext& ctx, const HighlightRuleSet& rules,
                                        const std::vector<Scene>& context_scenes,
                                        const std::vector<Scene>& scenes);

// Opening/ending suitability over the full tagged roster; reply contract is a
// <result> array of {episode, scene_id, thought, starting, ending} records.
providers::LlmRequest boundary_selection(const PromptContext& ctx,
                                         const std::vector<Scene>& tagged_roster);

// Redundant-scene removal inside one candidate window; reply contract is a
// <result> array of {episode, scene_id, thought, delete} records.
providers::LlmRequest pruning(const PromptContext& ctx, const std::vector<Scene>& window_roster);

// One-shot editing from narrations; reply contract is a <result> array of
// {episode, scene_id, thought} records naming the scenes to keep.
providers::LlmRequest end2end_narration(const PromptContext& ctx, const HighlightRuleSet& rules,
                                        const std::vector<Scene>& roster);

// One-shot editing straight from ASR; reply contract is a <result> array of
// {episode, start_time, end_time, thought} records with times in seconds.
providers::LlmRequest end2end_asr(const PromptContext& ctx, const HighlightRuleSet& rules,
                                  const std::vector<DialogueLine>& transcript);

}  // namespace prompts
}  // namespace hive::editing
