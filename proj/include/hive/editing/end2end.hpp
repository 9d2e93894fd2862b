#pragma once

#include <vector>

#include "hive/core/types.hpp"
#include "hive/editing/prompts.hpp"
#include "hive/editing/rules.hpp"
#include "hive/providers/provider.hpp"

namespace hive::editing {

enum class End2EndMode { Narration, Asr };

// Single-call baseline editors. Narration mode sends the whole narrated
// roster and keeps the scenes the reply names; ASR mode sends the raw
// transcript and keeps the replied time spans (seconds, converted to ms and
// clamped to each episode's extent; overlaps are merged with a warning).
// `video` supplies scene intervals and episode extents; `transcript` is only
// read in ASR mode.
EditPlan end2end_edit(const SceneSequence& video, const std::vector<DialogueLine>& transcript,
                      const HighlightRuleSet& rules, providers::LlmProvider& llm,
                      const PromptContext& ctx, End2EndMode mode);

}  // namespace hive::editing
