#include "hive/providers/run_log.hpp"

#include <json.hpp>

#include "hive/core/errors.hpp"
#include "hive/providers/digest.hpp"

namespace hive::providers {

RunLog::RunLog(const std::string& path) : out_(path, std::ios::app) {
  if (!out_) {
    throw ConfigError("cannot open run log for writing: " + path);
  }
}

void RunLog::record(const LlmRequest& request, const LlmResponse& response) {
  nlohmann::json entry{{"task", request.task},
                       {"request_digest", request_digest(request)},
                       {"response_digest", response_digest(response)}};
  std::lock_guard<std::mutex> lock(mutex_);
  out_ << entry.dump() << "\n";
  out_.flush();
}

void RunLog::record_failure(const LlmRequest& request, const std::string& error) {
  nlohmann::json entry{
      {"task", request.task}, {"request_digest", request_digest(request)}, {"error", error}};
  std::lock_guard<std::mutex> lock(mutex_);
  out_ << entry.dump() << "\n";
  out_.flush();
}

LlmResponse LoggingLlmProvider::complete(const LlmRequest& request) {
  try {
    LlmResponse response = inner_->complete(request);
    if (log_) log_->record(request, response);
    return response;
  } catch (const std::exception& e) {
    if (log_) log_->record_failure(request, e.what());
    throw;
  }
}

}  // namespace hive::providers
