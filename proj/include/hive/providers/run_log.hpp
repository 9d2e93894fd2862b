#pragma once

#include <fstream>
#include <memory>
#include <mutex>
#include <string>

#include "hive/providers/provider.hpp"

namespace hive::providers {

// JSON-lines log of every LLM exchange (task + request/response digests),
// written for replay and audit. Thread-safe appends.
class RunLog {
 public:
  explicit RunLog(const std::string& path);

  void record(const LlmRequest& request, const LlmResponse& response);
  void record_failure(const LlmRequest& request, const std::string& error);

 private:
  std::mutex mutex_;
  std::ofstream out_;
};

// Decorates a provider with run logging. A null log passes calls through.
class LoggingLlmProvider : public LlmProvider {
 public:
  LoggingLlmProvider(std::shared_ptr<LlmProvider> inner, std::shared_ptr<RunLog> log)
      : inner_(std::move(inner)), log_(std::move(log)) {}

  LlmResponse complete(const LlmRequest& request) override;

 private:
  std::shared_ptr<LlmProvider> inner_;
  std::shared_ptr<RunLog> log_;
};

}  // namespace hive::providers
