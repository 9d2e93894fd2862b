#include "hive/cli/config.hpp"

#include <cstdlib>

#include "json.hpp"

#include "hive/core/errors.hpp"
#include "hive/io/fs.hpp"
#include "hive/providers/mock.hpp"
#include "hive/providers/run_log.hpp"

#ifndef HIVE_RULES_DIR
#define HIVE_RULES_DIR "data/rules"
#endif

namespace hive::cli {

namespace {

using nlohmann::json;

std::string resolve(const std::filesystem::path& base, const std::string& rel) {
  if (rel.empty() || std::filesystem::path(rel).is_absolute() || base.empty()) {
    return rel;
  }
  return (base / rel).string();
}

}  // namespace

RunConfig load_run_config(const std::filesystem::path& path) {
  const std::string origin = path.string();
  const json doc = json::parse(io::read_file(path), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ConfigError("config file " + origin + " is not valid JSON");
  }
  if (!doc.is_object()) {
    throw ConfigError("config file " + origin + " must be a JSON object");
  }
  const std::filesystem::path base = path.parent_path();

  RunConfig config;
  auto str = [&](const json& node, const char* key, std::string& into) {
    if (node.contains(key)) {
      if (!node[key].is_string()) {
        throw ConfigError(std::string("config: \"") + key + "\" must be a string");
      }
      into = node[key].get<std::string>();
    }
  };
  auto integer = [&](const json& node, const char* key, auto& into) {
    if (node.contains(key)) {
      if (!node[key].is_number_integer()) {
        throw ConfigError(std::string("config: \"") + key + "\" must be an integer");
      }
      into = node[key].get<std::decay_t<decltype(into)>>();
    }
  };
  auto number = [&](const json& node, const char* key, double& into) {
    if (node.contains(key)) {
      if (!node[key].is_number()) {
        throw ConfigError(std::string("config: \"") + key + "\" must be a number");
      }
      into = node[key].get<double>();
    }
  };
  auto boolean = [&](const json& node, const char* key, bool& into) {
    if (node.contains(key)) {
      if (!node[key].is_boolean()) {
        throw ConfigError(std::string("config: \"") + key + "\" must be a boolean");
      }
      into = node[key].get<bool>();
    }
  };

  str(doc, "title", config.title);
  str(doc, "audience", config.audience);
  if (config.audience != "male" && config.audience != "female") {
    throw ConfigError("config: audience must be \"male\" or \"female\"");
  }
  str(doc, "model", config.model);
  str(doc, "seed_log", config.seed_log);
  config.seed_log = resolve(base, config.seed_log);
  str(doc, "rules_path", config.rules_path);
  config.rules_path = resolve(base, config.rules_path);

  if (doc.contains("provider")) {
    const json& p = doc["provider"];
    if (!p.is_object()) {
      throw ConfigError("config: \"provider\" must be an object");
    }
    str(p, "mode", config.provider_mode);
    if (config.provider_mode != "mock" && config.provider_mode != "http") {
      throw ConfigError("config: provider.mode must be \"mock\" or \"http\"");
    }
    str(p, "fixtures", config.mock_fixtures);
    config.mock_fixtures = resolve(base, config.mock_fixtures);
    str(p, "endpoint", config.http.endpoint);
    str(p, "path", config.http.path);
    str(p, "api_key_env", config.http.api_key_env);
    integer(p, "timeout_seconds", config.http.timeout_seconds);
    if (config.provider_mode == "mock" && config.mock_fixtures.empty()) {
      throw ConfigError("config: provider.mode \"mock\" needs provider.fixtures");
    }
    if (config.provider_mode == "http" && config.http.endpoint.empty()) {
      throw ConfigError("config: provider.mode \"http\" needs provider.endpoint");
    }
  }

  if (doc.contains("editing")) {
    const json& e = doc["editing"];
    if (!e.is_object()) {
      throw ConfigError("config: \"editing\" must be an object");
    }
    integer(e, "top_k", config.edit_options.top_k);
    boolean(e, "allow_cross_episode_clips", config.edit_options.allow_cross_episode_clips);
    std::int64_t budget = static_cast<std::int64_t>(config.edit_options.chunk_budget_chars);
    integer(e, "chunk_budget_chars", budget);
    if (budget < 0) {
      throw ConfigError("config: editing.chunk_budget_chars must be non-negative");
    }
    config.edit_options.chunk_budget_chars = static_cast<std::size_t>(budget);
  }

  if (doc.contains("understanding")) {
    const json& u = doc["understanding"];
    if (!u.is_object()) {
      throw ConfigError("config: \"understanding\" must be an object");
    }
    number(u, "fusion_threshold", config.understand_options.fusion_threshold);
    number(u, "face_similarity_threshold", config.understand_options.face_similarity_threshold);
    integer(u, "n_speaker_voters", config.understand_options.n_speaker_voters);
    integer(u, "max_in_flight", config.understand_options.max_in_flight);
    std::string merges;
    str(u, "fusion_merges", merges);
    config.fusion_merges_path = resolve(base, merges);
  }

  config.http.model = config.model;
  config.understand_options.title = config.title;
  config.understand_options.audience = config.audience;
  config.understand_options.model = config.model;
  return config;
}

std::shared_ptr<providers::LlmProvider> make_llm_provider(const RunConfig& config) {
  std::shared_ptr<providers::LlmProvider> provider;
  if (config.provider_mode == "mock") {
    provider = std::make_shared<providers::MockLlmProvider>(
        providers::MockLlmProvider::from_file(config.mock_fixtures));
  } else if (config.provider_mode == "http") {
    providers::HttpLlmConfig http = config.http;
    http.model = config.model;
    provider = std::make_shared<providers::HttpLlmProvider>(http);
  } else {
    throw ConfigError(
        "no chat provider configured: set provider.mode to \"mock\" or \"http\" in the config, "
        "or pass --mock-fixtures");
  }
  if (!config.seed_log.empty()) {
    auto log = std::make_shared<providers::RunLog>(config.seed_log);
    provider = std::make_shared<providers::LoggingLlmProvider>(provider, log);
  }
  return provider;
}

std::shared_ptr<providers::ShotFusionClassifier> make_fusion_classifier(const RunConfig& config) {
  auto classifier = std::make_shared<providers::ScriptedFusionClassifier>();
  if (config.fusion_merges_path.empty()) {
    return classifier;
  }
  const json doc =
      json::parse(io::read_file(config.fusion_merges_path), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ConfigError("fusion merges file " + config.fusion_merges_path +
                      " must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "format_version") {
      continue;
    }
    EpisodeId episode_id = 0;
    try {
      episode_id = std::stoi(key);
    } catch (const std::exception&) {
      throw ConfigError("fusion merges: key \"" + key + "\" is not an episode id");
    }
    if (!value.is_array()) {
      throw ConfigError("fusion merges: entry \"" + key + "\" must be an array of shot indices");
    }
    std::vector<int> indices;
    for (const auto& v : value) {
      if (!v.is_number_integer() || v.get<int>() < 0) {
        throw ConfigError("fusion merges: shot indices must be non-negative integers");
      }
      indices.push_back(v.get<int>());
    }
    classifier->set_merges(episode_id, std::move(indices));
  }
  return classifier;
}

editing::HighlightRuleSet resolve_rules(const RunConfig& config, const std::string& audience) {
  if (!config.rules_path.empty()) {
    return editing::load_rule_set(config.rules_path);
  }
  const std::string stock = std::string(HIVE_RULES_DIR) + "/" + audience + "_audience.json";
  return editing::load_rule_set(stock);
}

}  // namespace hive::cli
