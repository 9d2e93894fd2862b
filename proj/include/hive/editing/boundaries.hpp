#pragma once

#include <vector>

#include "hive/core/types.hpp"
#include "hive/editing/prompts.hpp"
#include "hive/providers/provider.hpp"

namespace hive::editing {

// Candidate openings for a clip: every General scene strictly before the clip,
// plus the first scene of every highlight clip starting no later than this
// one. Returned as ascending global indices.
std::vector<int> opening_candidates(const HighlightClip& clip, const SceneSequence& scored,
                                    const std::vector<HighlightClip>& all_clips);

// Candidate endings: every General scene strictly after the clip, plus the
// last scene of every highlight clip ending no earlier than this one.
std::vector<int> ending_candidates(const HighlightClip& clip, const SceneSequence& scored,
                                   const std::vector<HighlightClip>& all_clips);

struct BoundarySelection {
  std::vector<int> openings;  // ascending global indices, subset of the candidates
  std::vector<int> endings;
};

// Asks the LLM which candidates work as the start/end of an edit built around
// `clip`. The full roster is rendered with <Highlight>/<Optional Start>/
// <Optional End> tags; decisions about non-candidate scenes are discarded
// with a warning. Throws ClipSkippedError when either side comes back empty.
BoundarySelection filter_boundaries(const HighlightClip& clip,
                                    const std::vector<int>& opening_cands,
                                    const std::vector<int>& ending_cands,
                                    const SceneSequence& scored, providers::LlmProvider& llm,
                                    const PromptContext& ctx);

}  // namespace hive::editing
