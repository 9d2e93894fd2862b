#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hive/core/types.hpp"

namespace hive::providers {

// Prompts render the scene roster one line per scene:
//
//   [Episode 2 | Scene 3] <Highlight> <Optional Start> narration text
//
// Pruning prompts use <Highlight Scene>/<General Scene> labels instead. The
// line shape is a stable contract: behavior-driven mocks reconstruct the
// roster from the rendered prompt alone, exactly as a live model would.

struct RosterLine {
  EpisodeId episode_id = 0;
  int scene_id = 0;
  bool highlight = false;
  bool optional_start = false;
  bool optional_end = false;
  std::string narration;
};

std::string render_roster_line(const Scene& scene, bool prune_labels = false);

// Extracts every roster line found in a prompt, in order.
std::vector<RosterLine> parse_roster_lines(const std::string& prompt);

}  // namespace hive::providers
