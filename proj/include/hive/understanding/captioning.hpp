#pragma once

#include <string>
#include <vector>

#include "hive/core/errors.hpp"
#include "hive/core/types.hpp"
#include "hive/providers/provider.hpp"
#include "hive/understanding/memory.hpp"
#include "hive/understanding/prompts.hpp"

namespace hive::understanding {

// The MLLM produced no usable narration for a scene. Callers are expected to
// flag the scene and keep going rather than abort a whole run.
class CaptionError : public Error {
 public:
  using Error::Error;
};

// Captions one scene: snapshots the memory context, renders the narration
// prompt with characters / scene dialogue / previous-segment context, calls
// the MLLM and records the trimmed narration back into memory. Returns the
// narration; throws CaptionError when the reply trims to nothing.
std::string caption_scene(const Scene& scene, const std::vector<DialogueLine>& dialogue,
                          providers::LlmProvider& mllm, MemoryStore& memory,
                          const PromptContext& ctx);

}  // namespace hive::understanding
