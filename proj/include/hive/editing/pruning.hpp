#pragma once

#include <vector>

#include "hive/core/types.hpp"
#include "hive/editing/prompts.hpp"
#include "hive/providers/provider.hpp"

namespace hive::editing {

// Asks the LLM to drop redundant General scenes inside the window and returns
// the kept global indices, ascending. Deletions are enforced, not trusted:
// a delete decision only lands when the target is a General scene strictly
// inside (opening, ending) — Highlight scenes and the window's first/last
// scene survive regardless of what the reply says (each violation is logged).
std::vector<int> prune_window(const EditWindow& window, const SceneSequence& scored,
                              providers::LlmProvider& llm, const PromptContext& ctx);

// Splices kept scenes into a plan: consecutive global indices coalesce into
// one cut (scenes are contiguous within an episode), cuts stay in source
// order, and total_duration_ms is the exact sum. `window`, when given, fills
// the provenance block; pruned indices are recomputed as window minus kept.
EditPlan splice(const std::vector<int>& kept, const SceneSequence& scored,
                const EditWindow* window = nullptr);

}  // namespace hive::editing
