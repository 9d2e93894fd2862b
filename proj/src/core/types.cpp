#include "hive/core/types.hpp"

#include <algorithm>
#include <sstream>

#include "hive/core/errors.hpp"

namespace hive {

namespace {

std::string scene_label(const Scene& s) {
  std::ostringstream os;
  os << "episode " << s.episode_id << " scene " << s.scene_id;
  return os.str();
}

}  // namespace

SceneSequence::SceneSequence(std::vector<Scene> scenes) : scenes_(std::move(scenes)) {
  std::stable_sort(scenes_.begin(), scenes_.end(), [](const Scene& a, const Scene& b) {
    return std::make_pair(a.episode_id, a.scene_id) < std::make_pair(b.episode_id, b.scene_id);
  });
  validate();
  for (int i = 0; i < static_cast<int>(scenes_.size()); ++i) {
    index_[{scenes_[i].episode_id, scenes_[i].scene_id}] = i + 1;
  }
}

const Scene& SceneSequence::at(int global_index) const {
  if (global_index < 1 || global_index > size()) {
    std::ostringstream os;
    os << "global scene index " << global_index << " out of range 1.." << size();
    throw ValidationError(os.str());
  }
  return scenes_[static_cast<std::size_t>(global_index - 1)];
}

std::optional<int> SceneSequence::find(EpisodeId episode_id, int scene_id) const {
  auto it = index_.find({episode_id, scene_id});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SceneSequence SceneSequence::with_scores(const std::vector<int>& scores) const {
  if (static_cast<int>(scores.size()) != size()) {
    throw ValidationError("score vector length does not match scene count");
  }
  std::vector<Scene> updated = scenes_;
  for (int i = 0; i < size(); ++i) {
    if (scores[i] < 0) {
      throw ValidationError("scene scores must be non-negative");
    }
    updated[i].score = scores[i];
    updated[i].role = scores[i] > 0 ? SceneRole::Highlight : SceneRole::General;
  }
  return SceneSequence(std::move(updated));
}

void SceneSequence::validate() const {
  for (std::size_t i = 0; i < scenes_.size(); ++i) {
    const Scene& s = scenes_[i];
    if (s.episode_id <= 0) {
      throw ValidationError(scene_label(s) + ": episode_id must be positive");
    }
    if (s.scene_id <= 0) {
      throw ValidationError(scene_label(s) + ": scene_id must be positive");
    }
    if (!s.interval.valid() || s.interval.episode_id != s.episode_id) {
      throw ValidationError(scene_label(s) + ": malformed interval");
    }
    if (s.score < 0) {
      throw ValidationError(scene_label(s) + ": score must be non-negative");
    }
    if ((s.score == 0) != (s.role == SceneRole::General)) {
      throw ValidationError(scene_label(s) + ": role must be General iff score is 0");
    }
    if (i == 0) {
      if (s.scene_id != 1) {
        throw ValidationError(scene_label(s) + ": first scene of an episode must have scene_id 1");
      }
      continue;
    }
    const Scene& prev = scenes_[i - 1];
    if (prev.episode_id == s.episode_id) {
      if (s.scene_id != prev.scene_id + 1) {
        throw ValidationError(scene_label(s) + ": scene ids must be dense within an episode");
      }
      if (s.interval.start_ms != prev.interval.end_ms) {
        throw ValidationError(scene_label(s) + ": scenes must be contiguous within an episode");
      }
    } else {
      if (s.episode_id < prev.episode_id) {
        throw ValidationError("episodes out of order");  // unreachable after sort
      }
      if (s.scene_id != 1) {
        throw ValidationError(scene_label(s) + ": first scene of an episode must have scene_id 1");
      }
    }
  }
}

}  // namespace hive
