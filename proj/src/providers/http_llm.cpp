#include "hive/providers/http_llm.hpp"

#include <cstdlib>

#include <httplib.h>
#include <json.hpp>

#include "hive/core/errors.hpp"

namespace hive::providers {

HttpLlmProvider::HttpLlmProvider(HttpLlmConfig config) : config_(std::move(config)) {
  if (config_.endpoint.empty()) {
    throw ConfigError("remote LLM provider requires an endpoint");
  }
  const char* key = std::getenv(config_.api_key_env.c_str());
  if (key == nullptr || *key == '\0') {
    throw ConfigError("environment variable " + config_.api_key_env + " is not set");
  }
  api_key_ = key;
}

LlmResponse HttpLlmProvider::complete(const LlmRequest& request) {
  nlohmann::json body{{"model", request.model.empty() ? config_.model : request.model},
                      {"messages", nlohmann::json::array()},
                      {"temperature", request.temperature}};
  for (const ChatMessage& m : request.messages) {
    body["messages"].push_back({{"role", m.role}, {"content", m.content}});
  }

  httplib::Client client(config_.endpoint);
  client.set_read_timeout(config_.timeout_seconds, 0);
  client.set_bearer_token_auth(api_key_);

  auto result = client.Post(config_.path, body.dump(), "application/json");
  if (!result) {
    throw ProviderError("LLM request failed: " + httplib::to_string(result.error()));
  }
  if (result->status != 200) {
    throw ProviderError("LLM request returned HTTP " + std::to_string(result->status));
  }

  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(result->body);
  } catch (const nlohmann::json::exception& e) {
    throw ProviderError(std::string("LLM response is not valid JSON: ") + e.what());
  }
  if (!parsed.contains("content") || !parsed["content"].is_string()) {
    throw ProviderError("LLM response lacks a string \"content\" field");
  }
  return LlmResponse{parsed["content"].get<std::string>()};
}

}  // namespace hive::providers
