#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hive/core/types.hpp"
#include "hive/providers/provider.hpp"
#include "hive/understanding/prompts.hpp"

namespace hive::understanding {

// Raw per-episode inputs for the understanding pipeline, parsed from the
// ingest formats or fetched from providers.
struct EpisodeInputs {
  EpisodeId episode_id = 0;
  std::int64_t duration_ms = 0;
  std::vector<DialogueLine> asr;
  std::vector<providers::OcrLine> ocr;
  std::vector<std::int64_t> shot_boundaries;  // ms; may omit 0 / duration_ms
  std::vector<providers::FaceSample> faces;
};

struct UnderstandingOptions {
  std::string title = "untitled";
  std::string audience = "male";
  std::string model = "default";
  double fusion_threshold = 0.8;          // speaker vote acceptance
  double face_similarity_threshold = 0.75;
  int n_speaker_voters = 3;
  int max_in_flight = 1;                  // concurrency cap for voter calls
};

struct SceneFlag {
  EpisodeId episode_id = 0;
  int scene_id = 0;
  std::string reason;
};

struct UnderstandingResult {
  SceneSequence scenes;                 // narrated, unscored (all General)
  std::vector<DialogueLine> dialogue;   // corrected transcript, all episodes
  std::vector<CharacterProfile> characters;
  std::vector<SceneFlag> flagged_scenes;      // caption failures
  std::vector<int> rejected_correction_lines;  // indices into `dialogue`
};

// End-to-end video understanding over a batch of episodes:
//   1. cluster faces across all episodes into identity groups;
//   2. per episode: correct the ASR transcript against OCR, segment the
//      episode into scenes, caption every scene in order against the rolling
//      memory, then extract/update character profiles;
//   3. attribute each corrected dialogue line to a character by fusing
//      n_speaker_voters independent LLM votes.
// Episodes are processed in ascending id order; captioning is sequential
// because each scene's prompt embeds the previous scene's narration.
UnderstandingResult run_understanding(const std::vector<EpisodeInputs>& inputs,
                                      providers::LlmProvider& llm,
                                      providers::ShotFusionClassifier& classifier,
                                      const UnderstandingOptions& options);

}  // namespace hive::understanding
