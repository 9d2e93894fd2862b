#include "hive/understanding/memory.hpp"

#include <mutex>
#include <sstream>

#include "hive/core/errors.hpp"

namespace hive::understanding {

template <typename T>
const T* MemoryStore::latest_at(const History<T>& history, Version version) {
  const T* found = nullptr;
  for (const auto& [v, value] : history) {
    if (v > version) {
      break;
    }
    found = &value;
  }
  return found;
}

MemoryStore::Version MemoryStore::version() const {
  std::shared_lock lock(mutex_);
  return version_;
}

MemoryStore::Version MemoryStore::register_episode(EpisodeId episode_id,
                                                   std::vector<std::int64_t> scene_boundaries) {
  if (episode_id <= 0) {
    throw ValidationError("MemoryStore: episode id must be positive");
  }
  if (scene_boundaries.size() < 2) {
    throw ValidationError("MemoryStore: an episode needs at least two scene boundaries");
  }
  for (std::size_t i = 0; i + 1 < scene_boundaries.size(); ++i) {
    if (scene_boundaries[i] >= scene_boundaries[i + 1]) {
      throw ValidationError("MemoryStore: scene boundaries must be strictly increasing");
    }
  }
  std::unique_lock lock(mutex_);
  episodes_[episode_id] = {++version_, std::move(scene_boundaries)};
  return version_;
}

MemoryStore::Version MemoryStore::record_narration(EpisodeId episode_id, int scene_id,
                                                   std::string narration) {
  std::unique_lock lock(mutex_);
  const auto it = episodes_.find(episode_id);
  if (it == episodes_.end()) {
    std::ostringstream os;
    os << "MemoryStore: episode " << episode_id << " is not registered";
    throw ValidationError(os.str());
  }
  const int n_scenes = static_cast<int>(it->second.second.size()) - 1;
  if (scene_id < 1 || scene_id > n_scenes) {
    std::ostringstream os;
    os << "MemoryStore: scene " << scene_id << " out of range for episode " << episode_id;
    throw ValidationError(os.str());
  }
  narrations_[{episode_id, scene_id}].emplace_back(++version_, std::move(narration));
  return version_;
}

MemoryStore::Version MemoryStore::record_episode_summary(EpisodeId episode_id,
                                                         std::string summary) {
  std::unique_lock lock(mutex_);
  if (episodes_.find(episode_id) == episodes_.end()) {
    std::ostringstream os;
    os << "MemoryStore: episode " << episode_id << " is not registered";
    throw ValidationError(os.str());
  }
  summaries_[episode_id].emplace_back(++version_, std::move(summary));
  return version_;
}

MemoryStore::Version MemoryStore::upsert_character(CharacterProfile profile) {
  if (profile.id.empty()) {
    throw ValidationError("MemoryStore: character id must be non-empty");
  }
  std::unique_lock lock(mutex_);
  characters_[profile.id].emplace_back(++version_, std::move(profile));
  return version_;
}

MemoryStore::ContextBundle MemoryStore::context_at(Version version, EpisodeId episode_id,
                                                   int scene_id) const {
  std::shared_lock lock(mutex_);
  const auto ep_it = episodes_.find(episode_id);
  if (ep_it == episodes_.end() || ep_it->second.first > version) {
    std::ostringstream os;
    os << "MemoryStore: episode " << episode_id << " is not registered at version " << version;
    throw ValidationError(os.str());
  }
  const int n_scenes = static_cast<int>(ep_it->second.second.size()) - 1;
  if (scene_id < 1 || scene_id > n_scenes) {
    std::ostringstream os;
    os << "MemoryStore: scene " << scene_id << " out of range for episode " << episode_id;
    throw ValidationError(os.str());
  }

  ContextBundle bundle;
  const std::pair<EpisodeId, int> key{episode_id, scene_id};
  // narrations_ is ordered by (episode, scene); walk the strictly preceding
  // keys backwards for the most recent narration visible at `version`.
  for (auto it = narrations_.lower_bound(key); it != narrations_.begin();) {
    --it;
    if (const std::string* n = latest_at(it->second, version)) {
      bundle.previous_narration = *n;
      break;
    }
  }
  for (auto it = summaries_.lower_bound(episode_id); it != summaries_.begin();) {
    --it;
    if (const std::string* s = latest_at(it->second, version)) {
      bundle.previous_episode_summary = *s;
      break;
    }
  }
  for (const auto& [id, history] : characters_) {
    if (const CharacterProfile* p = latest_at(history, version)) {
      bundle.characters.push_back(*p);
    }
  }
  return bundle;
}

MemoryStore::ContextBundle MemoryStore::context(EpisodeId episode_id, int scene_id) const {
  return context_at(version(), episode_id, scene_id);
}

std::vector<CharacterProfile> MemoryStore::characters_at(Version version) const {
  std::shared_lock lock(mutex_);
  std::vector<CharacterProfile> out;
  for (const auto& [id, history] : characters_) {
    if (const CharacterProfile* p = latest_at(history, version)) {
      out.push_back(*p);
    }
  }
  return out;
}

std::vector<CharacterProfile> MemoryStore::characters() const {
  return characters_at(version());
}

std::optional<std::string> MemoryStore::narration(EpisodeId episode_id, int scene_id) const {
  std::shared_lock lock(mutex_);
  const auto it = narrations_.find({episode_id, scene_id});
  if (it == narrations_.end() || it->second.empty()) {
    return std::nullopt;
  }
  return it->second.back().second;
}

std::vector<std::int64_t> MemoryStore::scene_boundaries(EpisodeId episode_id) const {
  std::shared_lock lock(mutex_);
  const auto it = episodes_.find(episode_id);
  if (it == episodes_.end()) {
    std::ostringstream os;
    os << "MemoryStore: episode " << episode_id << " is not registered";
    throw ValidationError(os.str());
  }
  return it->second.second;
}

std::vector<EpisodeId> MemoryStore::episodes() const {
  std::shared_lock lock(mutex_);
  std::vector<EpisodeId> out;
  for (const auto& [id, entry] : episodes_) {
    out.push_back(id);
  }
  return out;
}

}  // namespace hive::understanding
