#include "hive/providers/roster_format.hpp"

#include <regex>
#include <sstream>

namespace hive::providers {

std::string render_roster_line(const Scene& scene, bool prune_labels) {
  std::ostringstream os;
  os << "[Episode " << scene.episode_id << " | Scene " << scene.scene_id << "]";
  if (prune_labels) {
    os << (scene.role == SceneRole::Highlight ? " <Highlight Scene>" : " <General Scene>");
  } else {
    if (scene.role == SceneRole::Highlight) os << " <Highlight>";
    if (scene.tags.count(SceneTag::OptionalStart)) os << " <Optional Start>";
    if (scene.tags.count(SceneTag::OptionalEnd)) os << " <Optional End>";
  }
  os << " " << scene.narration;
  return os.str();
}

std::vector<RosterLine> parse_roster_lines(const std::string& prompt) {
  static const std::regex line_re(R"(^\[Episode (\d+) \| Scene (\d+)\]((?: <[^>]+>)*) ?(.*)$)");
  std::vector<RosterLine> lines;
  std::istringstream in(prompt);
  std::string raw;
  while (std::getline(in, raw)) {
    std::smatch m;
    if (!std::regex_match(raw, m, line_re)) continue;
    RosterLine line;
    line.episode_id = std::stoi(m[1].str());
    line.scene_id = std::stoi(m[2].str());
    const std::string tags = m[3].str();
    line.highlight = tags.find("<Highlight") != std::string::npos;
    line.optional_start = tags.find("<Optional Start>") != std::string::npos;
    line.optional_end = tags.find("<Optional End>") != std::string::npos;
    line.narration = m[4].str();
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace hive::providers
