#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "hive/core/types.hpp"

namespace hive::understanding {

// Rolling drama memory shared across the understanding pipeline. Every write
// bumps a monotonic version and tags the entry with it; reads can be pinned to
// a version so that a reader observes a consistent snapshot while writers keep
// appending (older entries are never mutated in place).
class MemoryStore {
 public:
  using Version = std::uint64_t;

  struct ContextBundle {
    // Narration of the latest scene strictly preceding the queried one in
    // (episode_id, scene_id) order; empty at the start of the drama.
    std::string previous_narration;
    std::optional<std::string> previous_episode_summary;
    std::vector<CharacterProfile> characters;
  };

  Version version() const;

  // Registers an episode's scene boundaries (ms, ascending, >= 2 entries).
  Version register_episode(EpisodeId episode_id, std::vector<std::int64_t> scene_boundaries);
  Version record_narration(EpisodeId episode_id, int scene_id, std::string narration);
  Version record_episode_summary(EpisodeId episode_id, std::string summary);
  Version upsert_character(CharacterProfile profile);

  // Snapshot the context for captioning scene (episode_id, scene_id) at the
  // given version; context() uses the latest version. The episode must have
  // been registered at or before the pinned version.
  ContextBundle context_at(Version version, EpisodeId episode_id, int scene_id) const;
  ContextBundle context(EpisodeId episode_id, int scene_id) const;

  std::vector<CharacterProfile> characters_at(Version version) const;
  std::vector<CharacterProfile> characters() const;
  std::optional<std::string> narration(EpisodeId episode_id, int scene_id) const;
  std::vector<std::int64_t> scene_boundaries(EpisodeId episode_id) const;
  std::vector<EpisodeId> episodes() const;

 private:
  template <typename T>
  using History = std::vector<std::pair<Version, T>>;  // ascending by version

  template <typename T>
  static const T* latest_at(const History<T>& history, Version version);

  mutable std::shared_mutex mutex_;
  Version version_ = 0;
  std::map<EpisodeId, std::pair<Version, std::vector<std::int64_t>>> episodes_;
  std::map<std::pair<EpisodeId, int>, History<std::string>> narrations_;
  std::map<EpisodeId, History<std::string>> summaries_;
  std::map<CharacterId, History<CharacterProfile>> characters_;
};

}  // namespace hive::understanding
