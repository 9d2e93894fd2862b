#pragma once

#include <string>
#include <vector>

#include "hive/core/types.hpp"
#include "hive/providers/provider.hpp"

namespace hive::understanding {

// Drama-level fields rendered into every prompt.
struct PromptContext {
  std::string title;
  std::string audience;  // "male" | "female"
  std::string model;
};

namespace prompts {

// ASR-correction instruction. ASR and OCR records are rendered one JSON
// object per line; the reply contract is a <result> array with exactly one
// {start_ms, end_ms, speaker, text} record per ASR line, in order.
providers::LlmRequest correction(const PromptContext& ctx,
                                 const std::vector<DialogueLine>& asr,
                                 const std::vector<providers::OcrLine>& ocr,
                                 const std::vector<std::vector<int>>& ocr_matches);

// Scene-narration instruction combining the segment reference, character
// roster, dialogue transcript and previous-segment context. Reply is plain
// narration text (no result block).
providers::LlmRequest caption(const PromptContext& ctx, const Scene& scene,
                              const std::vector<CharacterProfile>& characters,
                              const std::vector<DialogueLine>& dialogue,
                              const std::string& prior_context);

// Global segmentation refinement over stage-2 segments; reply contract is a
// <result> array of {first, second, thought} adjacent-merge directives.
providers::LlmRequest scene_refinement(const PromptContext& ctx, EpisodeId episode_id,
                                       const std::vector<TimeInterval>& segments);

// One speaker-attribution vote for a dialogue line; reply contract is a
// <result> array with a single {speaker, confidence, thought} record.
providers::LlmRequest speaker_attribution(const PromptContext& ctx, const DialogueLine& line,
                                          const std::string& surrounding_dialogue,
                                          const std::vector<CharacterProfile>& characters,
                                          int voter_index);

// Character-description extraction from episode narrations; reply contract is
// a <result> array of {name, description, face_cluster_id?} records.
providers::LlmRequest character_extraction(const PromptContext& ctx, EpisodeId episode_id,
                                           const std::vector<std::string>& narrations,
                                           const std::vector<int>& known_cluster_ids);

}  // namespace prompts
}  // namespace hive::understanding
