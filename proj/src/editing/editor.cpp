#include "hive/editing/editor.hpp"

#include <algorithm>
#include <sstream>

#include "hive/core/errors.hpp"
#include "hive/core/log.hpp"
#include "hive/editing/boundaries.hpp"
#include "hive/editing/highlight.hpp"
#include "hive/editing/pruning.hpp"
#include "hive/editing/windows.hpp"

namespace hive::editing {

namespace {

std::string make_plan_id(std::size_t ordinal) {
  std::ostringstream os;
  os << "plan_";
  os.fill('0');
  os.width(4);
  os << ordinal;
  return os.str();
}

std::vector<int> all_indices(const SceneSequence& scenes) {
  std::vector<int> out;
  for (int g = 1; g <= scenes.size(); ++g) {
    out.push_back(g);
  }
  return out;
}

}  // namespace

EditOutcome edit(const SceneSequence& video, const HighlightRuleSet& rules,
                 providers::LlmProvider& llm, const PromptContext& ctx,
                 const EditOptions& options) {
  if (video.empty()) {
    throw ValidationError("edit: no scenes to edit");
  }
  for (const auto& scene : video.scenes()) {
    if (scene.narration.empty()) {
      std::ostringstream os;
      os << "edit: episode " << scene.episode_id << " scene " << scene.scene_id
         << " has no narration";
      throw ValidationError(os.str());
    }
  }

  EditOutcome outcome;
  std::vector<EditWindow> windows;

  if (options.highlight_detection) {
    auto scoring = score_scenes(video, rules, llm, ctx, options.chunk_budget_chars);
    outcome.scored = std::move(scoring.scenes);
    outcome.defaulted_scene_indices = std::move(scoring.defaulted_indices);
    outcome.clips = merge_highlight_clips(outcome.scored, options.allow_cross_episode_clips);
    if (outcome.clips.empty()) {
      throw EmptyHighlightsError("edit: no scene scored positive, nothing to build an edit from");
    }

    const int k = std::clamp(options.top_k, 1, static_cast<int>(outcome.clips.size()));
    std::vector<ClipCandidates> per_clip;
    for (int i = 0; i < k; ++i) {
      const auto& clip = outcome.clips[static_cast<std::size_t>(i)];
      const auto o_cands = opening_candidates(clip, outcome.scored, outcome.clips);
      const auto e_cands = ending_candidates(clip, outcome.scored, outcome.clips);
      if (options.boundary_selection) {
        try {
          auto selection = filter_boundaries(clip, o_cands, e_cands, outcome.scored, llm, ctx);
          per_clip.push_back({clip, std::move(selection.openings), std::move(selection.endings)});
        } catch (const ClipSkippedError& err) {
          log::warn(err.what());
          ++outcome.skipped_clips;
        }
      } else {
        per_clip.push_back({clip, o_cands, e_cands});
      }
    }
    windows = enumerate_windows(per_clip);
    if (windows.empty()) {
      throw NoWindowsError("edit: every top clip was skipped; no candidate window remains");
    }
  } else {
    // Highlight detection disabled: no scores, every scene is both an opening
    // and an ending candidate.
    outcome.scored = video.with_scores(std::vector<int>(static_cast<std::size_t>(video.size()), 0));
    const auto everything = all_indices(outcome.scored);
    std::vector<int> openings = everything;
    std::vector<int> endings = everything;
    if (options.boundary_selection) {
      try {
        auto selection = filter_boundaries(HighlightClip{}, everything, everything,
                                           outcome.scored, llm, ctx);
        openings = std::move(selection.openings);
        endings = std::move(selection.endings);
      } catch (const ClipSkippedError&) {
        throw NoWindowsError("edit: no scene was accepted as an opening/ending");
      }
    }
    for (const int opening : openings) {
      for (const int ending : endings) {
        if (opening <= ending) {
          windows.push_back({HighlightClip{}, opening, ending});
        }
      }
    }
    if (windows.empty()) {
      throw NoWindowsError("edit: no valid (opening, ending) pair remains");
    }
  }

  for (const auto& window : windows) {
    std::vector<int> kept;
    if (options.pruning) {
      kept = prune_window(window, outcome.scored, llm, ctx);
    } else {
      for (int g = window.opening_index; g <= window.ending_index; ++g) {
        kept.push_back(g);
      }
    }
    EditPlan plan = splice(kept, outcome.scored, &window);
    plan.plan_id = make_plan_id(outcome.plans.size() + 1);
    outcome.plans.push_back(std::move(plan));
  }
  return outcome;
}

}  // namespace hive::editing
