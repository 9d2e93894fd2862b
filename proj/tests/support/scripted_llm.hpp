#pragma once

#include <deque>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hive/core/errors.hpp"
#include "hive/providers/provider.hpp"

namespace hive::testing {

inline std::string wrap_result(const nlohmann::json& records) {
  return "<result>" + records.dump() + "</result>";
}

// Replays canned response texts in FIFO order, capturing every request so
// tests can inspect the rendered prompts.
class ScriptedLlmProvider : public providers::LlmProvider {
 public:
  ScriptedLlmProvider() = default;
  explicit ScriptedLlmProvider(std::vector<std::string> responses) {
    for (auto& r : responses) push(std::move(r));
  }

  void push(std::string response) { queue_.push_back(std::move(response)); }
  void push_records(const nlohmann::json& records) { push(wrap_result(records)); }

  providers::LlmResponse complete(const providers::LlmRequest& request) override {
    requests.push_back(request);
    if (queue_.empty()) {
      throw ProviderError("scripted provider exhausted (task \"" + request.task + "\")");
    }
    std::string text = std::move(queue_.front());
    queue_.pop_front();
    return providers::LlmResponse{std::move(text)};
  }

  std::size_t remaining() const { return queue_.size(); }

  std::vector<providers::LlmRequest> requests;

 private:
  std::deque<std::string> queue_;
};

// Dispatches on the request's task tag to a registered handler; useful when a
// test drives a multi-call flow but only cares about shaping some replies.
class TaskLlmProvider : public providers::LlmProvider {
 public:
  using Handler = std::function<std::string(const providers::LlmRequest&)>;

  void on(const std::string& task, Handler handler) { handlers_[task] = std::move(handler); }

  providers::LlmResponse complete(const providers::LlmRequest& request) override {
    requests.push_back(request);
    auto it = handlers_.find(request.task);
    if (it == handlers_.end()) {
      throw ProviderError("no scripted handler for task \"" + request.task + "\"");
    }
    return providers::LlmResponse{it->second(request)};
  }

  std::vector<providers::LlmRequest> requests;

 private:
  std::map<std::string, Handler> handlers_;
};

}  // namespace hive::testing
