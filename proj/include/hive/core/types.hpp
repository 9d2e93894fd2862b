#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hive {

using EpisodeId = int;
using CharacterId = std::string;

// Half-open [start_ms, end_ms) span of one source episode. All timeline
// arithmetic is exact integer milliseconds.
struct TimeInterval {
  EpisodeId episode_id = 0;
  std::int64_t start_ms = 0;
  std::int64_t end_ms = 0;

  std::int64_t duration_ms() const { return end_ms - start_ms; }
  bool valid() const { return episode_id > 0 && start_ms >= 0 && start_ms < end_ms; }

  friend auto operator<=>(const TimeInterval&, const TimeInterval&) = default;
};

enum class SceneRole { General, Highlight };
enum class SceneTag { OptionalStart, OptionalEnd };

enum class DialogueSource { Asr, Corrected };

struct DialogueLine {
  std::string id;
  TimeInterval interval;
  std::optional<CharacterId> speaker;
  std::string text;
  DialogueSource source = DialogueSource::Asr;
};

// The atomic editing unit: a semantically complete segment of one episode.
struct Scene {
  EpisodeId episode_id = 0;
  int scene_id = 0;  // 1-based within the episode
  TimeInterval interval;
  std::string narration;
  std::vector<std::string> dialogue_refs;
  int score = 0;
  SceneRole role = SceneRole::General;
  std::set<SceneTag> tags;
};

// Maximal run of consecutive positive-score scenes, identified by 1-based
// global scene indices. score is the sum of the member scene scores.
struct HighlightClip {
  int first_index = 0;
  int last_index = 0;
  int score = 0;

  friend bool operator==(const HighlightClip&, const HighlightClip&) = default;
};

// One candidate edit: an (opening, ending) scene pair enclosing a clip.
struct EditWindow {
  HighlightClip clip;
  int opening_index = 0;
  int ending_index = 0;
};

struct PlanProvenance {
  std::string kind;  // "highlight" | "end2end_asr" | "end2end_narration"
  int clip_first_index = 0;
  int clip_last_index = 0;
  int opening_index = 0;
  int ending_index = 0;
  std::vector<int> pruned_indices;

  friend bool operator==(const PlanProvenance&, const PlanProvenance&) = default;
};

// Ordered, non-overlapping source intervals composing one output clip.
struct EditPlan {
  std::string plan_id;
  std::vector<TimeInterval> cuts;
  PlanProvenance provenance;
  std::int64_t total_duration_ms = 0;

  friend bool operator==(const EditPlan&, const EditPlan&) = default;
};

struct CharacterProfile {
  CharacterId id;
  std::optional<std::string> display_name;
  std::optional<int> face_cluster_id;
  std::vector<std::string> descriptors;
  std::vector<std::pair<CharacterId, std::string>> relationships;
};

// Globally ordered scene list. Order is lexicographic (episode_id, scene_id)
// and global indices are dense 1..n, so a highlight run may span an episode
// boundary. Immutable after construction.
class SceneSequence {
 public:
  SceneSequence() = default;
  explicit SceneSequence(std::vector<Scene> scenes);

  int size() const { return static_cast<int>(scenes_.size()); }
  bool empty() const { return scenes_.empty(); }

  // global_index is 1-based.
  const Scene& at(int global_index) const;
  const std::vector<Scene>& scenes() const { return scenes_; }

  std::optional<int> find(EpisodeId episode_id, int scene_id) const;

  // Returns a copy with per-scene scores replaced; roles are derived from the
  // new scores (score > 0 <=> Highlight).
  SceneSequence with_scores(const std::vector<int>& scores_by_global_index) const;

 private:
  void validate() const;

  std::vector<Scene> scenes_;
  std::map<std::pair<EpisodeId, int>, int> index_;
};

}  // namespace hive
