#pragma once

#include <string>

#include "hive/providers/provider.hpp"

namespace hive::providers {

struct HttpLlmConfig {
  std::string endpoint;  // scheme://host[:port]
  std::string path = "/v1/chat/completions";
  std::string model;
  std::string api_key_env = "HIVE_LLM_API_KEY";
  int timeout_seconds = 120;
};

// Remote chat-completion client. POSTs {model, messages, temperature} and
// expects {content} back; authenticates with a bearer token read from the
// configured environment variable.
class HttpLlmProvider : public LlmProvider {
 public:
  explicit HttpLlmProvider(HttpLlmConfig config);

  LlmResponse complete(const LlmRequest& request) override;

 private:
  HttpLlmConfig config_;
  std::string api_key_;
};

}  // namespace hive::providers
