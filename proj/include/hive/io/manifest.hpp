#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hive/core/types.hpp"

namespace hive::io {

// On-disk description of an understood drama: episodes tiled completely by
// scenes, each scene carrying its narration and optional highlight score.
struct SceneManifest {
  struct Episode {
    EpisodeId episode_id = 0;
    std::int64_t duration_ms = 0;
    std::vector<Scene> scenes;
  };
  std::string title;
  std::string audience = "male";
  std::vector<Episode> episodes;
};

// Parses + validates a manifest file. JSON syntax errors raise
// ParseError(Malformed); structural violations raise ValidationError whose
// message carries the JSON pointer of the offending node.
SceneManifest load_manifest(const std::filesystem::path& path);
SceneManifest manifest_from_json_text(const std::string& text, const std::string& origin);

void save_manifest(const SceneManifest& manifest, const std::filesystem::path& path);

// Flattens the manifest into the global scene order.
SceneSequence to_scene_sequence(const SceneManifest& manifest);

// Rebuilds a manifest from understood scenes (used by the understand command).
SceneManifest manifest_from_scenes(const std::string& title, const std::string& audience,
                                   const SceneSequence& scenes);

}  // namespace hive::io
