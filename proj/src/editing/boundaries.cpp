#include "hive/editing/boundaries.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hive/core/errors.hpp"
#include "hive/core/log.hpp"
#include "hive/understanding/result_block.hpp"

namespace hive::editing {

std::vector<int> opening_candidates(const HighlightClip& clip, const SceneSequence& scored,
                                    const std::vector<HighlightClip>& all_clips) {
  std::set<int> cands;
  for (int g = 1; g < clip.first_index; ++g) {
    if (scored.at(g).role == SceneRole::General) {
      cands.insert(g);
    }
  }
  for (const auto& other : all_clips) {
    if (other.first_index <= clip.first_index) {
      cands.insert(other.first_index);
    }
  }
  return {cands.begin(), cands.end()};
}

std::vector<int> ending_candidates(const HighlightClip& clip, const SceneSequence& scored,
                                   const std::vector<HighlightClip>& all_clips) {
  std::set<int> cands;
  for (int g = clip.last_index + 1; g <= scored.size(); ++g) {
    if (scored.at(g).role == SceneRole::General) {
      cands.insert(g);
    }
  }
  for (const auto& other : all_clips) {
    if (other.last_index >= clip.last_index) {
      cands.insert(other.last_index);
    }
  }
  return {cands.begin(), cands.end()};
}

BoundarySelection filter_boundaries(const HighlightClip& clip,
                                    const std::vector<int>& opening_cands,
                                    const std::vector<int>& ending_cands,
                                    const SceneSequence& scored, providers::LlmProvider& llm,
                                    const PromptContext& ctx) {
  using understanding::call_for_records;
  using understanding::FieldKind;
  using understanding::FieldSpec;

  const std::set<int> openings_set(opening_cands.begin(), opening_cands.end());
  const std::set<int> endings_set(ending_cands.begin(), ending_cands.end());

  std::vector<Scene> roster;
  for (int g = 1; g <= scored.size(); ++g) {
    Scene scene = scored.at(g);
    scene.tags.clear();
    if (openings_set.count(g)) {
      scene.tags.insert(SceneTag::OptionalStart);
    }
    if (endings_set.count(g)) {
      scene.tags.insert(SceneTag::OptionalEnd);
    }
    roster.push_back(std::move(scene));
  }

  static const std::vector<FieldSpec> schema = {
      {"episode", FieldKind::Integer},
      {"scene_id", FieldKind::Integer},
      {"thought", FieldKind::String, /*required=*/false},
      {"starting", FieldKind::Boolean},
      {"ending", FieldKind::Boolean},
  };
  const auto request = prompts::boundary_selection(ctx, roster);
  const auto block = call_for_records(llm, request, schema);

  std::set<int> openings, endings;
  for (const auto& rec : block.records) {
    const int episode = rec.at("episode").get<int>();
    const int scene_id = rec.at("scene_id").get<int>();
    const auto global = scored.find(episode, scene_id);
    if (!global) {
      std::ostringstream os;
      os << "boundary decision for unknown scene (episode " << episode << ", scene " << scene_id
         << ") discarded";
      log::warn(os.str());
      continue;
    }
    const bool starting = rec.at("starting").get<bool>();
    const bool ending = rec.at("ending").get<bool>();
    if (starting) {
      if (openings_set.count(*global)) {
        openings.insert(*global);
      } else {
        std::ostringstream os;
        os << "scene at global index " << *global
           << " accepted as a start but it is not an opening candidate; discarded";
        log::warn(os.str());
      }
    }
    if (ending) {
      if (endings_set.count(*global)) {
        endings.insert(*global);
      } else {
        std::ostringstream os;
        os << "scene at global index " << *global
           << " accepted as an end but it is not an ending candidate; discarded";
        log::warn(os.str());
      }
    }
  }

  if (openings.empty() || endings.empty()) {
    std::ostringstream os;
    os << "clip [" << clip.first_index << ", " << clip.last_index << "] skipped: "
       << (openings.empty() ? "no opening accepted" : "no ending accepted");
    throw ClipSkippedError(os.str());
  }
  return {{openings.begin(), openings.end()}, {endings.begin(), endings.end()}};
}

}  // namespace hive::editing
