#pragma once

#include <cstddef>
#include <vector>

#include "hive/core/types.hpp"
#include "hive/editing/prompts.hpp"
#include "hive/editing/rules.hpp"
#include "hive/providers/provider.hpp"

namespace hive::editing {

using understanding::PromptContext;

struct ScoringOutcome {
  SceneSequence scenes;               // input scenes with scores and derived roles
  std::vector<int> defaulted_indices;  // global indices scored 0 because the reply omitted them
};

// LLM-scores every scene against the audience rule set. The roster is split
// into chunks of whole episodes whose rendered size stays within
// chunk_budget_chars (0 = one chunk); each chunk after the first repeats the
// previous episode's scenes as non-scored context. Replies may omit scenes
// (defaulted to 0 and reported) but must not score any (episode, scene) twice
// or negatively, and scores for unknown scenes are dropped with a warning.
ScoringOutcome score_scenes(const SceneSequence& scenes, const HighlightRuleSet& rules,
                            providers::LlmProvider& llm, const PromptContext& ctx,
                            std::size_t chunk_budget_chars = 0);

// Collapses maximal runs of consecutive positive-score scenes into clips and
// orders them by descending score, earlier first_index breaking ties. When
// allow_cross_episode is false, runs additionally break at episode joins.
std::vector<HighlightClip> merge_highlight_clips(const SceneSequence& scored,
                                                 bool allow_cross_episode = true);

}  // namespace hive::editing
