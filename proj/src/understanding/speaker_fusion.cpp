#include "hive/understanding/speaker_fusion.hpp"

#include "hive/core/errors.hpp"

namespace hive::understanding {

std::optional<CharacterId> fuse_speaker_votes(const std::vector<SpeakerVote>& votes,
                                              double threshold,
                                              const std::map<std::string, double>& source_weights) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ValidationError("fuse_speaker_votes: threshold must lie in (0, 1]");
  }
  struct Acc {
    double weighted_sum = 0.0;
    double weight = 0.0;
  };
  std::map<CharacterId, Acc> by_speaker;
  for (const auto& vote : votes) {
    if (vote.confidence < 0.0 || vote.confidence > 1.0) {
      throw ValidationError("fuse_speaker_votes: confidence must lie in [0, 1]");
    }
    if (vote.speaker.empty()) {
      continue;  // abstain
    }
    double w = 1.0;
    if (auto it = source_weights.find(vote.source); it != source_weights.end()) {
      if (it->second <= 0.0) {
        throw ValidationError("fuse_speaker_votes: source weights must be positive");
      }
      w = it->second;
    }
    auto& acc = by_speaker[vote.speaker];
    acc.weighted_sum += w * vote.confidence;
    acc.weight += w;
  }

  std::optional<CharacterId> best;
  double best_score = -1.0;
  for (const auto& [speaker, acc] : by_speaker) {
    const double fused = acc.weighted_sum / acc.weight;
    // std::map iterates in id order, so on a tie the earlier (smaller) id wins.
    if (fused > best_score) {
      best_score = fused;
      best = speaker;
    }
  }
  if (!best || best_score <= threshold) {
    return std::nullopt;
  }
  return best;
}

}  // namespace hive::understanding
