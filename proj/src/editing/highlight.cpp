#include "hive/editing/highlight.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "hive/core/errors.hpp"
#include "hive/core/log.hpp"
#include "hive/providers/roster_format.hpp"
#include "hive/understanding/result_block.hpp"

namespace hive::editing {

namespace {

using understanding::call_for_records;
using understanding::FieldKind;
using understanding::FieldSpec;

// Splits the scene list into chunks of whole episodes whose rendered roster
// stays within budget_chars. An oversized single episode still becomes its
// own chunk — episodes are never split.
std::vector<std::pair<std::size_t, std::size_t>> episode_chunks(const std::vector<Scene>& scenes,
                                                                std::size_t budget_chars) {
  std::vector<std::pair<std::size_t, std::size_t>> episodes;  // [first, last] scene index
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    if (episodes.empty() || scenes[episodes.back().first].episode_id != scenes[i].episode_id) {
      episodes.push_back({i, i});
    } else {
      episodes.back().second = i;
    }
  }

  std::vector<std::size_t> episode_size(episodes.size(), 0);
  for (std::size_t e = 0; e < episodes.size(); ++e) {
    for (std::size_t i = episodes[e].first; i <= episodes[e].second; ++i) {
      episode_size[e] += providers::render_roster_line(scenes[i]).size() + 1;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  std::size_t current = 0;
  for (std::size_t e = 0; e < episodes.size(); ++e) {
    const bool fits = chunks.empty() || budget_chars == 0 ||
                      current + episode_size[e] <= budget_chars;
    if (!chunks.empty() && fits) {
      chunks.back().second = episodes[e].second;
      current += episode_size[e];
    } else {
      chunks.push_back(episodes[e]);
      current = episode_size[e];
    }
  }
  return chunks;
}

}  // namespace

ScoringOutcome score_scenes(const SceneSequence& scenes, const HighlightRuleSet& rules,
                            providers::LlmProvider& llm, const PromptContext& ctx,
                            std::size_t chunk_budget_chars) {
  if (scenes.empty()) {
    throw ValidationError("score_scenes: no scenes to score");
  }
  for (const auto& scene : scenes.scenes()) {
    if (scene.narration.empty()) {
      std::ostringstream os;
      os << "score_scenes: episode " << scene.episode_id << " scene " << scene.scene_id
         << " has no narration";
      throw ValidationError(os.str());
    }
  }

  static const std::vector<FieldSpec> schema = {
      {"episode", FieldKind::Integer},
      {"scene_id", FieldKind::Integer},
      {"reason", FieldKind::String, /*required=*/false},
      {"score", FieldKind::Integer, /*required=*/true, 0.0},
  };

  const auto& all = scenes.scenes();
  const auto chunks = episode_chunks(all, chunk_budget_chars);

  std::map<std::pair<EpisodeId, int>, int> scored;
  for (const auto& [first, last] : chunks) {
    std::vector<Scene> chunk_scenes(all.begin() + static_cast<std::ptrdiff_t>(first),
                                    all.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    // Overlap: repeat the episode preceding the chunk as unscored context.
    std::vector<Scene> context;
    if (first > 0) {
      const EpisodeId prev_ep = all[first - 1].episode_id;
      std::size_t ctx_first = first;
      while (ctx_first > 0 && all[ctx_first - 1].episode_id == prev_ep) {
        --ctx_first;
      }
      context.assign(all.begin() + static_cast<std::ptrdiff_t>(ctx_first),
                     all.begin() + static_cast<std::ptrdiff_t>(first));
    }

    const auto request = prompts::highlight_scoring(ctx, rules, context, chunk_scenes);
    const auto block = call_for_records(llm, request, schema);

    std::map<std::pair<EpisodeId, int>, bool> seen_in_reply;
    for (std::size_t r = 0; r < block.records.size(); ++r) {
      const auto& rec = block.records[r];
      const std::pair<EpisodeId, int> key{rec.at("episode").get<int>(),
                                          rec.at("scene_id").get<int>()};
      if (seen_in_reply[key]) {
        std::ostringstream os;
        os << "scoring reply lists episode " << key.first << " scene " << key.second
           << " more than once";
        throw ParseError(ParseErrorKind::SchemaViolation, os.str(), r);
      }
      seen_in_reply[key] = true;

      const auto global = scenes.find(key.first, key.second);
      const bool owned = global && static_cast<std::size_t>(*global - 1) >= first &&
                         static_cast<std::size_t>(*global - 1) <= last;
      if (!owned) {
        std::ostringstream os;
        os << "dropping score for episode " << key.first << " scene " << key.second
           << ": not among the scenes under evaluation";
        log::warn(os.str());
        continue;
      }
      scored[key] = rec.at("score").get<int>();
    }
  }

  ScoringOutcome out;
  std::vector<int> scores(static_cast<std::size_t>(scenes.size()), 0);
  for (int g = 1; g <= scenes.size(); ++g) {
    const auto& scene = scenes.at(g);
    const auto it = scored.find({scene.episode_id, scene.scene_id});
    if (it == scored.end()) {
      std::ostringstream os;
      os << "no score returned for episode " << scene.episode_id << " scene " << scene.scene_id
         << "; defaulting to 0";
      log::warn(os.str());
      out.defaulted_indices.push_back(g);
    } else {
      scores[static_cast<std::size_t>(g - 1)] = it->second;
    }
  }
  out.scenes = scenes.with_scores(scores);
  return out;
}

std::vector<HighlightClip> merge_highlight_clips(const SceneSequence& scored,
                                                 bool allow_cross_episode) {
  std::vector<HighlightClip> clips;
  for (int g = 1; g <= scored.size(); ++g) {
    const auto& scene = scored.at(g);
    if (scene.score <= 0) {
      continue;
    }
    const bool extends = !clips.empty() && clips.back().last_index == g - 1 &&
                         (allow_cross_episode ||
                          scored.at(g - 1).episode_id == scene.episode_id);
    if (extends) {
      clips.back().last_index = g;
      clips.back().score += scene.score;
    } else {
      clips.push_back({g, g, scene.score});
    }
  }
  std::stable_sort(clips.begin(), clips.end(), [](const HighlightClip& a, const HighlightClip& b) {
    if (a.score != b.score) {
      return a.score > b.score;
    }
    return a.first_index < b.first_index;
  });
  return clips;
}

}  // namespace hive::editing
