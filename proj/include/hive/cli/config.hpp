#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "hive/editing/editor.hpp"
#include "hive/editing/rules.hpp"
#include "hive/providers/http_llm.hpp"
#include "hive/providers/provider.hpp"
#include "hive/understanding/pipeline.hpp"

namespace hive::cli {

// Run-wide configuration, loadable from JSON and overridable by flags.
// Relative paths inside the file resolve against the file's directory.
struct RunConfig {
  std::string title = "untitled";
  std::string audience = "male";
  std::string model = "drama-editor";

  std::string provider_mode;  // "mock" | "http"; empty until configured
  std::string mock_fixtures;
  providers::HttpLlmConfig http;
  std::string seed_log;

  editing::EditOptions edit_options;
  understanding::UnderstandingOptions understand_options;
  std::string fusion_merges_path;  // optional {"<episode_id>": [shot indices]}
  std::string rules_path;          // empty: resolved from the audience
};

RunConfig load_run_config(const std::filesystem::path& path);

// Builds the chat provider per the config (wrapping it with run logging when
// seed_log is set). Throws ConfigError unless exactly one mode is configured.
std::shared_ptr<providers::LlmProvider> make_llm_provider(const RunConfig& config);

std::shared_ptr<providers::ShotFusionClassifier> make_fusion_classifier(const RunConfig& config);

// Loads the configured rule file, or the stock rule table for the audience.
editing::HighlightRuleSet resolve_rules(const RunConfig& config, const std::string& audience);

}  // namespace hive::cli
