#include "hive/io/manifest.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hive/core/errors.hpp"
#include "hive/io/fs.hpp"

namespace hive::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& pointer, const std::string& what,
                       const std::string& origin) {
  throw ValidationError("manifest " + origin + ": " + pointer + " " + what);
}

std::int64_t require_int(const json& node, const std::string& pointer, const char* key,
                         const std::string& origin) {
  if (!node.contains(key) || !node[key].is_number_integer()) {
    fail(pointer + "/" + key, "must be an integer", origin);
  }
  return node[key].get<std::int64_t>();
}

std::string require_string(const json& node, const std::string& pointer, const char* key,
                           const std::string& origin) {
  if (!node.contains(key) || !node[key].is_string()) {
    fail(pointer + "/" + key, "must be a string", origin);
  }
  return node[key].get<std::string>();
}

}  // namespace

SceneManifest manifest_from_json_text(const std::string& text, const std::string& origin) {
  const json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ParseError(ParseErrorKind::Malformed, "manifest " + origin + " is not valid JSON");
  }
  if (!doc.is_object()) {
    fail("", "must be a JSON object", origin);
  }
  if (doc.contains("format_version") &&
      (!doc["format_version"].is_number_integer() || doc["format_version"].get<int>() != 1)) {
    fail("/format_version", "must be 1", origin);
  }

  SceneManifest manifest;
  if (doc.contains("title")) {
    manifest.title = require_string(doc, "", "title", origin);
  }
  if (doc.contains("audience")) {
    manifest.audience = require_string(doc, "", "audience", origin);
    if (manifest.audience != "male" && manifest.audience != "female") {
      fail("/audience", "must be \"male\" or \"female\"", origin);
    }
  }
  if (!doc.contains("episodes") || !doc["episodes"].is_array() || doc["episodes"].empty()) {
    fail("/episodes", "must be a non-empty array", origin);
  }

  std::set<EpisodeId> seen_episodes;
  for (std::size_t e = 0; e < doc["episodes"].size(); ++e) {
    std::ostringstream ep_ptr;
    ep_ptr << "/episodes/" << e;
    const json& ep_node = doc["episodes"][e];
    if (!ep_node.is_object()) {
      fail(ep_ptr.str(), "must be an object", origin);
    }

    SceneManifest::Episode episode;
    episode.episode_id =
        static_cast<EpisodeId>(require_int(ep_node, ep_ptr.str(), "episode_id", origin));
    if (episode.episode_id <= 0) {
      fail(ep_ptr.str() + "/episode_id", "must be positive", origin);
    }
    if (!seen_episodes.insert(episode.episode_id).second) {
      fail(ep_ptr.str() + "/episode_id", "duplicates an earlier episode", origin);
    }
    episode.duration_ms = require_int(ep_node, ep_ptr.str(), "duration_ms", origin);
    if (episode.duration_ms <= 0) {
      fail(ep_ptr.str() + "/duration_ms", "must be positive", origin);
    }
    if (!ep_node.contains("scenes") || !ep_node["scenes"].is_array() ||
        ep_node["scenes"].empty()) {
      fail(ep_ptr.str() + "/scenes", "must be a non-empty array", origin);
    }

    std::int64_t expected_start = 0;
    for (std::size_t s = 0; s < ep_node["scenes"].size(); ++s) {
      std::ostringstream sc_ptr;
      sc_ptr << ep_ptr.str() << "/scenes/" << s;
      const json& sc_node = ep_node["scenes"][s];
      if (!sc_node.is_object()) {
        fail(sc_ptr.str(), "must be an object", origin);
      }

      Scene scene;
      scene.episode_id = episode.episode_id;
      scene.scene_id = static_cast<int>(require_int(sc_node, sc_ptr.str(), "scene_id", origin));
      if (scene.scene_id != static_cast<int>(s) + 1) {
        std::ostringstream os;
        os << "must be " << s + 1 << " (scene ids are dense and 1-based)";
        fail(sc_ptr.str() + "/scene_id", os.str(), origin);
      }
      const auto start_ms = require_int(sc_node, sc_ptr.str(), "start_ms", origin);
      const auto end_ms = require_int(sc_node, sc_ptr.str(), "end_ms", origin);
      if (start_ms != expected_start) {
        std::ostringstream os;
        os << "must be " << expected_start << " (scenes tile the episode without gaps)";
        fail(sc_ptr.str() + "/start_ms", os.str(), origin);
      }
      if (end_ms <= start_ms) {
        fail(sc_ptr.str() + "/end_ms", "must be greater than start_ms", origin);
      }
      if (end_ms > episode.duration_ms) {
        fail(sc_ptr.str() + "/end_ms", "exceeds the episode duration", origin);
      }
      scene.interval = {episode.episode_id, start_ms, end_ms};
      expected_start = end_ms;

      if (sc_node.contains("narration")) {
        scene.narration = require_string(sc_node, sc_ptr.str(), "narration", origin);
      }
      if (sc_node.contains("score")) {
        if (!sc_node["score"].is_number_integer() || sc_node["score"].get<int>() < 0) {
          fail(sc_ptr.str() + "/score", "must be a non-negative integer", origin);
        }
        scene.score = sc_node["score"].get<int>();
      }
      scene.role = scene.score > 0 ? SceneRole::Highlight : SceneRole::General;
      if (sc_node.contains("role")) {
        const auto role = require_string(sc_node, sc_ptr.str(), "role", origin);
        if (role != "general" && role != "highlight") {
          fail(sc_ptr.str() + "/role", "must be \"general\" or \"highlight\"", origin);
        }
        if ((role == "highlight") != (scene.score > 0)) {
          fail(sc_ptr.str() + "/role", "contradicts the score (score > 0 <=> highlight)", origin);
        }
      }
      if (sc_node.contains("dialogue_refs")) {
        if (!sc_node["dialogue_refs"].is_array()) {
          fail(sc_ptr.str() + "/dialogue_refs", "must be an array of strings", origin);
        }
        for (const auto& ref : sc_node["dialogue_refs"]) {
          if (!ref.is_string()) {
            fail(sc_ptr.str() + "/dialogue_refs", "must be an array of strings", origin);
          }
          scene.dialogue_refs.push_back(ref.get<std::string>());
        }
      }
      episode.scenes.push_back(std::move(scene));
    }
    if (expected_start != episode.duration_ms) {
      std::ostringstream os;
      os << "last scene ends at " << expected_start << " but the episode lasts "
         << episode.duration_ms;
      fail(ep_ptr.str() + "/scenes", os.str(), origin);
    }
    manifest.episodes.push_back(std::move(episode));
  }

  std::sort(manifest.episodes.begin(), manifest.episodes.end(),
            [](const auto& a, const auto& b) { return a.episode_id < b.episode_id; });
  return manifest;
}

SceneManifest load_manifest(const std::filesystem::path& path) {
  return manifest_from_json_text(read_file(path), path.string());
}

void save_manifest(const SceneManifest& manifest, const std::filesystem::path& path) {
  json doc;
  doc["format_version"] = 1;
  doc["title"] = manifest.title;
  doc["audience"] = manifest.audience;
  doc["episodes"] = json::array();
  for (const auto& episode : manifest.episodes) {
    json ep_node;
    ep_node["episode_id"] = episode.episode_id;
    ep_node["duration_ms"] = episode.duration_ms;
    ep_node["scenes"] = json::array();
    for (const auto& scene : episode.scenes) {
      json sc_node;
      sc_node["scene_id"] = scene.scene_id;
      sc_node["start_ms"] = scene.interval.start_ms;
      sc_node["end_ms"] = scene.interval.end_ms;
      sc_node["narration"] = scene.narration;
      sc_node["score"] = scene.score;
      sc_node["role"] = scene.role == SceneRole::Highlight ? "highlight" : "general";
      if (!scene.dialogue_refs.empty()) {
        sc_node["dialogue_refs"] = scene.dialogue_refs;
      }
      ep_node["scenes"].push_back(std::move(sc_node));
    }
    doc["episodes"].push_back(std::move(ep_node));
  }
  write_file_atomic(path, doc.dump(2) + "\n");
}

SceneSequence to_scene_sequence(const SceneManifest& manifest) {
  std::vector<Scene> scenes;
  for (const auto& episode : manifest.episodes) {
    for (const auto& scene : episode.scenes) {
      scenes.push_back(scene);
    }
  }
  return SceneSequence(std::move(scenes));
}

SceneManifest manifest_from_scenes(const std::string& title, const std::string& audience,
                                   const SceneSequence& scenes) {
  SceneManifest manifest;
  manifest.title = title;
  manifest.audience = audience;
  for (const auto& scene : scenes.scenes()) {
    if (manifest.episodes.empty() ||
        manifest.episodes.back().episode_id != scene.episode_id) {
      manifest.episodes.push_back({scene.episode_id, 0, {}});
    }
    manifest.episodes.back().scenes.push_back(scene);
    manifest.episodes.back().duration_ms = scene.interval.end_ms;
  }
  return manifest;
}

}  // namespace hive::io
