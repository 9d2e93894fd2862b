#include "hive/editing/pruning.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hive/core/errors.hpp"
#include "hive/core/log.hpp"
#include "hive/understanding/result_block.hpp"

namespace hive::editing {

std::vector<int> prune_window(const EditWindow& window, const SceneSequence& scored,
                              providers::LlmProvider& llm, const PromptContext& ctx) {
  using understanding::call_for_records;
  using understanding::FieldKind;
  using understanding::FieldSpec;

  if (window.opening_index < 1 || window.ending_index > scored.size() ||
      window.opening_index > window.ending_index) {
    throw ValidationError("prune_window: window out of range");
  }

  std::vector<Scene> roster;
  for (int g = window.opening_index; g <= window.ending_index; ++g) {
    roster.push_back(scored.at(g));
  }
  const auto request = prompts::pruning(ctx, roster);
  static const std::vector<FieldSpec> schema = {
      {"episode", FieldKind::Integer},
      {"scene_id", FieldKind::Integer},
      {"thought", FieldKind::String, /*required=*/false},
      {"delete", FieldKind::Boolean},
  };
  const auto block = call_for_records(llm, request, schema);

  std::set<int> deleted;
  for (const auto& rec : block.records) {
    if (!rec.at("delete").get<bool>()) {
      continue;
    }
    const int episode = rec.at("episode").get<int>();
    const int scene_id = rec.at("scene_id").get<int>();
    const auto global = scored.find(episode, scene_id);
    std::ostringstream at;
    at << "(episode " << episode << ", scene " << scene_id << ")";
    if (!global || *global < window.opening_index || *global > window.ending_index) {
      log::warn("prune decision outside the window for " + at.str() + " ignored");
      continue;
    }
    if (scored.at(*global).role == SceneRole::Highlight) {
      log::warn("prune decision would delete highlight scene " + at.str() + "; ignored");
      continue;
    }
    if (*global == window.opening_index || *global == window.ending_index) {
      log::warn("prune decision would delete the window boundary " + at.str() + "; ignored");
      continue;
    }
    deleted.insert(*global);
  }

  std::vector<int> kept;
  for (int g = window.opening_index; g <= window.ending_index; ++g) {
    if (!deleted.count(g)) {
      kept.push_back(g);
    }
  }
  return kept;
}

EditPlan splice(const std::vector<int>& kept, const SceneSequence& scored,
                const EditWindow* window) {
  if (kept.empty()) {
    throw ValidationError("splice: no scenes kept");
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < 1 || kept[i] > scored.size()) {
      throw ValidationError("splice: kept index out of range");
    }
    if (i > 0 && kept[i] <= kept[i - 1]) {
      throw ValidationError("splice: kept indices must be strictly ascending");
    }
  }

  EditPlan plan;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const auto& interval = scored.at(kept[i]).interval;
    const bool adjacent = i > 0 && kept[i] == kept[i - 1] + 1 &&
                          scored.at(kept[i - 1]).episode_id == interval.episode_id;
    if (adjacent) {
      plan.cuts.back().end_ms = interval.end_ms;
    } else {
      plan.cuts.push_back(interval);
    }
  }
  for (const auto& cut : plan.cuts) {
    plan.total_duration_ms += cut.duration_ms();
  }

  if (window != nullptr) {
    plan.provenance.kind = "highlight";
    plan.provenance.clip_first_index = window->clip.first_index;
    plan.provenance.clip_last_index = window->clip.last_index;
    plan.provenance.opening_index = window->opening_index;
    plan.provenance.ending_index = window->ending_index;
    const std::set<int> kept_set(kept.begin(), kept.end());
    for (int g = window->opening_index; g <= window->ending_index; ++g) {
      if (!kept_set.count(g)) {
        plan.provenance.pruned_indices.push_back(g);
      }
    }
  }
  return plan;
}

}  // namespace hive::editing
