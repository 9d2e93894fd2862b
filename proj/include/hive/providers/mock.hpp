#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hive/providers/provider.hpp"

namespace hive::providers {

// Deterministic offline chat provider driven by a fixture file:
//
//   {
//     "format_version": 1,
//     "responses": { "<request digest>": "raw response text", ... },
//     "behaviors": { "<task>": { "mode": "...", ... }, ... }
//   }
//
// Exact digest matches win. Otherwise the task's behavior synthesizes a
// contract-valid response from the request text (rosters are recovered from
// the prompt's scene lines). A request with neither match is a provider
// error carrying the digest, so the fixture can be extended.
class MockLlmProvider : public LlmProvider {
 public:
  static MockLlmProvider from_file(const std::string& path);
  explicit MockLlmProvider(nlohmann::json fixture);

  LlmResponse complete(const LlmRequest& request) override;

 private:
  std::string apply_behavior(const nlohmann::json& behavior, const LlmRequest& request) const;

  std::map<std::string, std::string> responses_;
  nlohmann::json behaviors_;
};

// Fixture-scripted shot-fusion classifier: merges the adjacent shot pairs
// listed per episode.
class ScriptedFusionClassifier : public ShotFusionClassifier {
 public:
  void set_merges(EpisodeId episode_id, std::vector<int> shot_indices);
  bool same_scene(EpisodeId episode_id, int shot_index) override;

 private:
  std::map<EpisodeId, std::vector<int>> merges_;
};

// Threshold-on-histogram mock: adjacent shots merge when the L1 distance of
// their feature vectors is below the threshold.
class HistogramFusionClassifier : public ShotFusionClassifier {
 public:
  HistogramFusionClassifier(std::map<EpisodeId, std::vector<std::vector<double>>> histograms,
                            double threshold)
      : histograms_(std::move(histograms)), threshold_(threshold) {}

  bool same_scene(EpisodeId episode_id, int shot_index) override;

 private:
  std::map<EpisodeId, std::vector<std::vector<double>>> histograms_;
  double threshold_;
};

}  // namespace hive::providers
