#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hive/core/types.hpp"

namespace hive::understanding {

struct SpeakerVote {
  std::string source;   // voter identity, e.g. "llm_voter_1", "diarization"
  CharacterId speaker;  // empty string = abstain
  double confidence = 0.0;
};

// Fuses per-line speaker votes into one decision. Votes are grouped by
// speaker; each speaker's score is the weighted mean confidence of its votes
// (weight by source, default 1.0). The top speaker is returned iff its fused
// score strictly exceeds `threshold`; ties fall to the lexicographically
// smaller id. Abstensions (empty speaker) are dropped before grouping.
std::optional<CharacterId> fuse_speaker_votes(
    const std::vector<SpeakerVote>& votes, double threshold = 0.8,
    const std::map<std::string, double>& source_weights = {});

}  // namespace hive::understanding
