#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hive/core/types.hpp"

namespace hive::providers {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string content;
};

struct LlmRequest {
  // Pipeline-internal task tag ("highlight_scoring", "pruning", ...). Used for
  // run logging and mock behavior dispatch; never sent over the wire.
  std::string task;
  std::string model;
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
};

struct LlmResponse {
  std::string content;
};

class LlmProvider {
 public:
  virtual ~LlmProvider() = default;
  virtual LlmResponse complete(const LlmRequest& request) = 0;
};

// Non-LLM model services. Each is either a remote/file-backed client or a
// deterministic mock; the pipeline behaves identically for either given
// identical outputs.

class AsrProvider {
 public:
  virtual ~AsrProvider() = default;
  virtual std::vector<DialogueLine> transcript(EpisodeId episode_id) = 0;
};

struct OcrLine {
  std::int64_t timestamp_ms = 0;
  std::string text;
  std::array<double, 4> region{0.0, 0.0, 0.0, 0.0};  // normalized x, y, w, h
};

class OcrProvider {
 public:
  virtual ~OcrProvider() = default;
  virtual std::vector<OcrLine> frame_text(EpisodeId episode_id) = 0;
};

struct FaceSample {
  std::int64_t timestamp_ms = 0;
  std::vector<double> embedding;  // L2-normalized
};

class FaceEmbedder {
 public:
  virtual ~FaceEmbedder() = default;
  virtual std::vector<FaceSample> embeddings(EpisodeId episode_id) = 0;
};

struct SpeakerTurn {
  TimeInterval interval;
  int turn_id = 0;  // anonymous diarization label
};

class Diarizer {
 public:
  virtual ~Diarizer() = default;
  virtual std::vector<SpeakerTurn> speaker_turns(EpisodeId episode_id) = 0;
};

class ShotDetector {
 public:
  virtual ~ShotDetector() = default;
  // Strictly increasing boundaries covering [0, episode duration].
  virtual std::vector<std::int64_t> boundaries(EpisodeId episode_id) = 0;
};

class ShotFusionClassifier {
 public:
  virtual ~ShotFusionClassifier() = default;
  // True when the adjacent shots shot_index and shot_index+1 belong to the
  // same scene. Shot indices are 0-based.
  virtual bool same_scene(EpisodeId episode_id, int shot_index) = 0;
};

struct ProviderSuite {
  std::shared_ptr<LlmProvider> llm;
  std::shared_ptr<AsrProvider> asr;
  std::shared_ptr<OcrProvider> ocr;
  std::shared_ptr<FaceEmbedder> face_embedder;
  std::shared_ptr<Diarizer> diarizer;
  std::shared_ptr<ShotDetector> shot_detector;
  std::shared_ptr<ShotFusionClassifier> shot_fusion_classifier;
};

}  // namespace hive::providers
