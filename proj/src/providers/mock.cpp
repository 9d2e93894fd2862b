#include "hive/providers/mock.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hive/core/errors.hpp"
#include "hive/providers/digest.hpp"
#include "hive/providers/roster_format.hpp"

namespace hive::providers {

namespace {

using nlohmann::json;

std::string wrap_result(const json& records) {
  return "<result>" + records.dump() + "</result>";
}

json scores_behavior(const json& behavior, const std::string& prompt) {
  std::map<std::pair<int, int>, int> table;
  for (const json& entry : behavior.value("scores", json::array())) {
    table[{entry.at("episode").get<int>(), entry.at("scene_id").get<int>()}] =
        entry.at("score").get<int>();
  }
  json records = json::array();
  for (const RosterLine& line : parse_roster_lines(prompt)) {
    auto it = table.find({line.episode_id, line.scene_id});
    const int score = it == table.end() ? 0 : it->second;
    records.push_back({{"episode", line.episode_id},
                       {"scene_id", line.scene_id},
                       {"reason", "fixture"},
                       {"score", score}});
  }
  return records;
}

json boundary_behavior(const json& behavior, const std::string& prompt) {
  const std::string mode = behavior.at("mode").get<std::string>();
  json records = json::array();
  for (const RosterLine& line : parse_roster_lines(prompt)) {
    if (!line.optional_start && !line.optional_end) continue;
    bool starting = false;
    bool ending = false;
    if (mode == "accept_all") {
      starting = line.optional_start;
      ending = line.optional_end;
    }
    records.push_back({{"episode", line.episode_id},
                       {"scene_id", line.scene_id},
                       {"thought", "fixture"},
                       {"starting", starting},
                       {"ending", ending}});
  }
  return records;
}

json prune_behavior(const json& behavior) {
  json records = json::array();
  for (const json& entry : behavior.value("scenes", json::array())) {
    records.push_back({{"episode", entry.at("episode").get<int>()},
                       {"scene_id", entry.at("scene_id").get<int>()},
                       {"thought", "fixture"},
                       {"delete", true}});
  }
  return records;
}

json merge_behavior(const json& behavior) {
  json records = json::array();
  for (const json& pair : behavior.value("pairs", json::array())) {
    records.push_back(
        {{"first", pair.at(0).get<int>()}, {"second", pair.at(1).get<int>()}, {"thought", "fixture"}});
  }
  return records;
}

// Echoes the ASR records found in the correction prompt (one JSON object per
// line, keyed by start_ms/end_ms) back unchanged.
json identity_correction(const std::string& prompt) {
  json records = json::array();
  std::istringstream in(prompt);
  std::string raw;
  while (std::getline(in, raw)) {
    if (raw.empty() || raw.front() != '{') continue;
    json parsed = json::parse(raw, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("start_ms") || !parsed.contains("end_ms")) {
      continue;
    }
    records.push_back(parsed);
  }
  return records;
}

std::string caption_behavior(const std::string& prompt) {
  const std::vector<RosterLine> lines = parse_roster_lines(prompt);
  if (lines.empty()) return "A scene unfolds.";
  std::ostringstream os;
  os << "In episode " << lines.front().episode_id << ", scene " << lines.front().scene_id
     << ", the story advances through a self-contained beat.";
  return os.str();
}

json fixed_vote(const json& behavior) {
  json records = json::array();
  records.push_back({{"speaker", behavior.at("speaker").get<std::string>()},
                     {"confidence", behavior.at("confidence").get<double>()},
                     {"thought", "fixture"}});
  return records;
}

json listed_records(const json& behavior, const char* key) {
  json records = json::array();
  for (json entry : behavior.value(key, json::array())) {
    if (!entry.contains("thought")) entry["thought"] = "fixture";
    records.push_back(entry);
  }
  return records;
}

}  // namespace

MockLlmProvider MockLlmProvider::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open mock fixture file: " + path);
  }
  json fixture = json::parse(in, nullptr, false);
  if (fixture.is_discarded() || !fixture.is_object()) {
    throw ConfigError("mock fixture file is not a JSON object: " + path);
  }
  return MockLlmProvider(std::move(fixture));
}

MockLlmProvider::MockLlmProvider(nlohmann::json fixture) {
  const json responses = fixture.value("responses", json::object());
  for (const auto& [digest, text] : responses.items()) {
    responses_[digest] = text.get<std::string>();
  }
  behaviors_ = fixture.value("behaviors", json::object());
}

LlmResponse MockLlmProvider::complete(const LlmRequest& request) {
  const std::string digest = request_digest(request);
  if (auto it = responses_.find(digest); it != responses_.end()) {
    return LlmResponse{it->second};
  }
  if (behaviors_.contains(request.task)) {
    return LlmResponse{apply_behavior(behaviors_.at(request.task), request)};
  }
  throw ProviderError("mock fixture has no response for task \"" + request.task +
                      "\" (request digest " + digest + ")");
}

std::string MockLlmProvider::apply_behavior(const nlohmann::json& behavior,
                                            const LlmRequest& request) const {
  const std::string prompt =
      request.messages.empty() ? std::string() : request.messages.back().content;
  const std::string mode = behavior.value("mode", std::string());

  if (mode == "raw") return behavior.at("text").get<std::string>();

  if (request.task == "highlight_scoring") return wrap_result(scores_behavior(behavior, prompt));
  if (request.task == "boundary_selection") return wrap_result(boundary_behavior(behavior, prompt));
  if (request.task == "pruning") {
    return wrap_result(mode == "delete" ? prune_behavior(behavior) : json::array());
  }
  if (request.task == "scene_refinement") {
    return wrap_result(mode == "merge" ? merge_behavior(behavior) : json::array());
  }
  if (request.task == "dialogue_correction") return wrap_result(identity_correction(prompt));
  if (request.task == "captioning") return caption_behavior(prompt);
  if (request.task == "speaker_attribution") {
    return wrap_result(mode == "fixed" ? fixed_vote(behavior) : json::array());
  }
  if (request.task == "character_extraction") {
    return wrap_result(mode == "table" ? listed_records(behavior, "characters") : json::array());
  }
  if (request.task == "end2end_narration") return wrap_result(listed_records(behavior, "scenes"));
  if (request.task == "end2end_asr") return wrap_result(listed_records(behavior, "spans"));

  throw ProviderError("mock fixture behavior for task \"" + request.task +
                      "\" is not understood (mode \"" + mode + "\")");
}

void ScriptedFusionClassifier::set_merges(EpisodeId episode_id, std::vector<int> shot_indices) {
  merges_[episode_id] = std::move(shot_indices);
}

bool ScriptedFusionClassifier::same_scene(EpisodeId episode_id, int shot_index) {
  auto it = merges_.find(episode_id);
  if (it == merges_.end()) return false;
  return std::find(it->second.begin(), it->second.end(), shot_index) != it->second.end();
}

bool HistogramFusionClassifier::same_scene(EpisodeId episode_id, int shot_index) {
  auto it = histograms_.find(episode_id);
  if (it == histograms_.end()) return false;
  const auto& hists = it->second;
  if (shot_index < 0 || shot_index + 1 >= static_cast<int>(hists.size())) return false;
  const auto& a = hists[shot_index];
  const auto& b = hists[shot_index + 1];
  if (a.size() != b.size()) return false;
  double l1 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    l1 += std::abs(a[i] - b[i]);
  }
  return l1 < threshold_;
}

}  // namespace hive::providers
