#include "hive/understanding/captioning.hpp"

#include <sstream>

namespace hive::understanding {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return {};
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string caption_scene(const Scene& scene, const std::vector<DialogueLine>& dialogue,
                          providers::LlmProvider& mllm, MemoryStore& memory,
                          const PromptContext& ctx) {
  const auto bundle = memory.context(scene.episode_id, scene.scene_id);
  std::string prior_context = bundle.previous_narration;
  if (scene.scene_id == 1 && bundle.previous_episode_summary) {
    prior_context = "Previous episode: " + *bundle.previous_episode_summary +
                    (prior_context.empty() ? "" : "\n" + prior_context);
  }
  const auto request = prompts::caption(ctx, scene, bundle.characters, dialogue, prior_context);
  const auto response = mllm.complete(request);
  const std::string narration = trim(response.content);
  if (narration.empty()) {
    std::ostringstream os;
    os << "empty narration for episode " << scene.episode_id << " scene " << scene.scene_id;
    throw CaptionError(os.str());
  }
  memory.record_narration(scene.episode_id, scene.scene_id, narration);
  return narration;
}

}  // namespace hive::understanding
