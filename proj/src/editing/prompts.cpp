#include "hive/editing/prompts.hpp"

#include <sstream>

#include "json.hpp"

#include "hive/providers/roster_format.hpp"

namespace hive::editing::prompts {

namespace {

providers::LlmRequest make_request(const PromptContext& ctx, std::string task, std::string body) {
  providers::LlmRequest req;
  req.task = std::move(task);
  req.model = ctx.model;
  req.temperature = 0.0;
  req.messages.push_back({"user", std::move(body)});
  return req;
}

std::string drama_fields(const PromptContext& ctx) {
  std::ostringstream os;
  os << "Drama Title: " << ctx.title << "\n";
  os << "Target Audience Gender: " << (ctx.audience == "female" ? "Female" : "Male") << "\n";
  return os.str();
}

const char* kStartCriteria =
    "For Selecting Start Scenes:\n"
    "You should analyze the plot and consider:\n"
    "- Audience Engagement: The opening scene should immediately grab attention and draw viewers "
    "in.\n"
    "- Clarity: Avoid starting with scenes that rely heavily on prior plot context, such as ones "
    "mid-event, which might confuse new viewers.\n"
    "- Introduction Scenes: Scenes that introduce characters, setting, or plot premise can be "
    "good starting points.\n";

const char* kEndCriteria =
    "For Selecting End Scenes:\n"
    "You should analyze the plot and consider:\n"
    "- Relevance: Avoid ending on scenes unrelated to the highlight, as they may transition to a "
    "new, less exciting storyline.\n"
    "- Neutral Endings: If a scene doesn't strongly affect the viewing experience, either way, it "
    "can still be chosen as an ending.\n"
    "- Suspense: Prefer ending on scenes that leave a sense of suspense, encouraging viewers to "
    "click to find out what happens next.\n"
    "- Complete Story Arc: It is also acceptable to end where a plot arc is fully wrapped up, "
    "giving a satisfying sense of closure while showcasing the highlight.\n";

}  // namespace

providers::LlmRequest highlight_scoring(const PromptContext& ctx, const HighlightRuleSet& rules,
                                        const std::vector<Scene>& context_scenes,
                                        const std::vector<Scene>& scenes) {
  std::ostringstream os;
  os << "## Role\n"
        "You are a professional short drama editor with a deep understanding of plot development "
        "and audience engagement. Your task is to evaluate the highlight level of each scene "
        "based on specific scoring guidelines and return the results accordingly.\n"
        "## Input\n"
        "- Drama Title: The name of the short drama.\n"
        "- Target Audience Gender: The primary gender demographic of the audience.\n"
        "- Scene Fragments: Several scene descriptions from a specific episode.\n"
        "## Output\n"
        "You should output the score for each scene in sequence, formatted as a JSON list, "
        "wrapped with <result> tags. The format should look like this:\n"
        "<result>\n"
        "[\n"
        "  {\"episode\": 1, \"scene_id\": 1, \"reason\": \"Your justification for the score of "
        "this scene.\", \"score\": 3},\n"
        "  {\"episode\": 1, \"scene_id\": 2, \"reason\": \"Your justification for the score of "
        "this scene.\", \"score\": 0},\n"
        "  ...\n"
        "]\n"
        "</result>\n"
        "Explanation:\n"
        "- episode: The episode number.\n"
        "- scene_id: The scene number within that episode.\n"
        "- score: The score assigned to the scene.\n"
        "- reason: The rationale behind the score.\n"
        "Please note: The input scene fragments may not start from Episode 1. Make sure to keep "
        "the episode and scene numbers consistent in your output. Score every scene listed under "
        "\"Scene Fragments\" exactly once; scenes under \"Context\" are for reference only and "
        "must not appear in the output.\n"
        "## Requirements\n"
        "1. I will provide you with editing insights that summarize key elements of popular and "
        "engaging plotlines. Based on these guidelines, please evaluate each scene as follows:\n"
        "2. If a scene matches one or more of the provided criteria, add up the corresponding "
        "points.\n"
        "3. If the scene does not meet any criteria or feels plain, assign a score of 0.\n\n";
  os << drama_fields(ctx);
  os << "\nScoring rules:\n" << render_rules(rules) << "\n";
  if (!context_scenes.empty()) {
    os << "Context (already evaluated, do not score):\n";
    for (const auto& scene : context_scenes) {
      os << providers::render_roster_line(scene) << "\n";
    }
    os << "\n";
  }
  os << "Scene Fragments:\n";
  for (const auto& scene : scenes) {
    os << providers::render_roster_line(scene) << "\n";
  }
  return make_request(ctx, "highlight_scoring", os.str());
}

providers::LlmRequest boundary_selection(const PromptContext& ctx,
                                         const std::vector<Scene>& tagged_roster) {
  std::ostringstream os;
  os << "## Role\n"
        "You are a professional short drama editor with a deep understanding of narrative "
        "structure and audience engagement. Your goal is to create captivating edited videos by "
        "highlighting the most exciting scenes. For simplicity, the editing strategy is as "
        "follows:\n"
        "- First, select the pre-identified highlight scenes as the core selling points.\n"
        "- Then, choose suitable starting and ending scenes to wrap around these highlights.\n"
        "In this task, the highlight scenes are already marked. You need to analyze the drama and "
        "select the best start and end scenes accordingly.\n"
        "## Input\n"
        "- Drama Title: The name of the short drama.\n"
        "- Target Audience Gender: The primary gender demographic of the audience.\n"
        "- Drama Plot: The storyline of the drama, is composed of multiple scenes. Each scene "
        "contains an episode ID, a scene ID, and a description of its visual content. Some scenes "
        "are labeled as follows:\n"
        "- <Highlight>: Key exciting scenes that serve as the main attraction in the edited "
        "video.\n"
        "- <Optional Start>: Scenes pre-selected as potential starting points.\n"
        "- <Optional End>: Scenes pre-selected as potential ending points.\n"
        "Some scenes may carry multiple tags at the same time.\n"
        "## Output\n"
        "For each scene labeled as <Optional Start> or <Optional End>, you need to decide whether "
        "it is suitable to be used as the start or end of the video.\n"
        "Output your decision as a JSON list wrapped in <result> tags, like this:\n"
        "<result>\n"
        "[\n"
        "{\"episode\": 1, \"scene_id\": 1, \"thought\": \"Your reason about if this scene is a "
        "suitable start or end scene.\", \"starting\": true, \"ending\": false},\n"
        "{\"episode\": 2, \"scene_id\": 4, \"thought\": \"Your reason about if this scene is a "
        "suitable start or end scene.\", \"starting\": false, \"ending\": true},\n"
        "  ...\n"
        "]\n"
        "</result>\n"
        "Explanation:\n"
        "- episode: episode number.\n"
        "- scene_id: scene number within that episode.\n"
        "- thought: your reasoning and decision for each scene.\n"
        "- starting: true if suitable as the start scene; otherwise false.\n"
        "- ending: true if suitable as the end scene; otherwise false.\n"
        "## Requirements\n";
  os << kStartCriteria << kEndCriteria << "\n";
  os << drama_fields(ctx);
  os << "Drama Plot:\n";
  for (const auto& scene : tagged_roster) {
    os << providers::render_roster_line(scene) << "\n";
  }
  return make_request(ctx, "boundary_selection", os.str());
}

providers::LlmRequest pruning(const PromptContext& ctx, const std::vector<Scene>& window_roster) {
  std::ostringstream os;
  os << "## Role\n"
        "You are a professional short drama editor with a deep understanding of storyline "
        "structure. Your goal is to craft engaging and cohesive edited videos. For this task, a "
        "relatively attractive video segment has already been pre-selected for you. Your job is "
        "to analyze the storyline and remove redundant scenes to make the plot more concise and "
        "gripping.\n"
        "## Input\n"
        "- Drama Title: The name of the short drama.\n"
        "- Target Audience Gender: The primary gender demographic of the audience.\n"
        "- Drama Plot: The storyline is composed of multiple scenes. Each scene includes an "
        "episode ID, a scene ID, and a description of the visual content.\n"
        "Additionally, each scene is labeled as either <Highlight Scene> or <General Scene>:\n"
        "- <Highlight Scene> refers to key moments designed to attract viewers and evoke strong "
        "emotions. These are the main selling points of the edited video.\n"
        "- <General Scene> refers to relatively plain or transitional scenes, which are "
        "candidates for possible removal.\n"
        "## Output\n"
        "For every <General Scene>, you need to decide whether it can be deleted. Generate your "
        "decision as a JSON list wrapped in <result> tags, like this:\n"
        "<result>\n"
        "[\n"
        "{\"episode\": 1, \"scene_id\": 1, \"thought\": \"Your reasoning on whether this scene "
        "should be kept or removed.\", \"delete\": false},\n"
        "{\"episode\": 1, \"scene_id\": 3, \"thought\": \"Your reasoning on whether this scene "
        "should be kept or removed.\", \"delete\": true},\n"
        "  ...\n"
        "]\n"
        "</result>\n"
        "Explanation:\n"
        "- episode: Episode number.\n"
        "- scene_id: Scene number within that episode.\n"
        "- thought: Your reasoning about whether this scene can be removed.\n"
        "- delete: true if the scene should be removed; false if it should be kept.\n"
        "## Requirements\n"
        "1. Only remove scenes labeled as <General Scene>. Scenes marked as <Highlight Scene> "
        "must never be deleted.\n"
        "2. Do not remove the first or last scene, even if labeled as <General Scene>.\n"
        "3. If there are no deletable scenes, simply output an empty list inside the <result> "
        "tag.\n"
        "4. Maintain the original episode and scene_id numbers as provided.\n"
        "5. Be cautious when removing scenes. Unnecessary deletions may affect the coherence of "
        "the storyline, negatively impacting the viewing experience.\n\n";
  os << drama_fields(ctx);
  os << "Drama Plot:\n";
  for (const auto& scene : window_roster) {
    os << providers::render_roster_line(scene, /*prune_labels=*/true) << "\n";
  }
  return make_request(ctx, "pruning", os.str());
}

providers::LlmRequest end2end_narration(const PromptContext& ctx, const HighlightRuleSet& rules,
                                        const std::vector<Scene>& roster) {
  std::ostringstream os;
  os << "## Role\n"
        "You are a professional short drama editor with a deep understanding of plot development "
        "and audience engagement.\n"
        "## Input\n"
        "- Drama Title: The name of the short drama.\n"
        "- Target Audience Gender: The primary gender demographic of the audience.\n"
        "- Scene Fragments: Several scene descriptions from a specific episode.\n"
        "## Requirements\n"
        "1. You need to fully understand the content of the input short drama, analyzing the plot "
        "and characters to grasp the overall storyline.\n"
        "2. Based on the scene descriptions, you should edit the drama by preserving the key plot "
        "points while ensuring the final cut remains coherent and smooth.\n"
        "3. Pay special attention to retaining highlight moments within the scenes, as these can "
        "significantly enhance the appeal of the edited video. However, always prioritize the "
        "overall narrative flow when selecting which highlight moments to include.\n"
        "I will provide highlight definitions and scoring rules for you.\n\n";
  os << render_rules(rules) << "\n";
  os << "Besides highlights, good opening and ending scenes are also crucial.\n";
  os << kStartCriteria << kEndCriteria;
  os << "## Output\n"
        "When generating the output, you should reflect on these requirements and devise an "
        "appropriate editing strategy. After careful consideration, select the scenes you believe "
        "are suitable for the final cut and include them in a list. Remember to use <result> as "
        "the delimiter and present the edited script in the following format:\n"
        "<result>\n"
        "[\n"
        "{\"episode\": 1, \"scene_id\": 1, \"thought\": \"Your justification for choosing this "
        "scene.\"},\n"
        "{\"episode\": 1, \"scene_id\": 2, \"thought\": \"Your justification for choosing this "
        "scene.\"},\n"
        "  ...\n"
        "]\n"
        "</result>\n"
        "Explanation:\n"
        "- episode: episode number.\n"
        "- scene_id: scene number within that episode.\n"
        "- thought: your reasoning and decision for each scene.\n\n";
  os << drama_fields(ctx);
  os << "Scene Fragments:\n";
  for (const auto& scene : roster) {
    os << providers::render_roster_line(scene) << "\n";
  }
  return make_request(ctx, "end2end_narration", os.str());
}

providers::LlmRequest end2end_asr(const PromptContext& ctx, const HighlightRuleSet& rules,
                                  const std::vector<DialogueLine>& transcript) {
  std::ostringstream os;
  os << "## Role\n"
        "You are a professional short drama editor with a deep understanding of plot development "
        "and audience engagement.\n"
        "## Input\n"
        "- Drama Title: The name of the short drama.\n"
        "- Target Audience Gender: The primary gender demographic of the audience.\n"
        "- Dialogue Information: Dialogue information includes the start time, end time, and the "
        "content of each utterance. Times are given in seconds from the start of the episode.\n"
        "## Requirements\n"
        "1. You need to fully understand the content of the input short drama, analyzing the plot "
        "and characters to grasp the overall storyline.\n"
        "2. Based on the dialogue, you should edit the drama by preserving the key plot points "
        "while ensuring the final cut remains coherent and smooth.\n"
        "3. Pay special attention to retaining highlight moments, as these can significantly "
        "enhance the appeal of the edited video. However, always prioritize the overall narrative "
        "flow when selecting which highlight moments to include.\n"
        "I will provide highlight definitions and scoring rules for you.\n\n";
  os << render_rules(rules) << "\n";
  os << "Besides highlights, good opening and ending scenes are also crucial.\n";
  os << kStartCriteria << kEndCriteria;
  os << "## Output\n"
        "In the output phase, you can consider these requirements and devise an editing strategy "
        "first. Finally, save the segments you deem suitable for editing into a list, and output "
        "your decision as a JSON list wrapped in <result> tags, like this:\n"
        "<result>\n"
        "[\n"
        "{\"episode\": 1, \"start_time\": 0, \"end_time\": 14, \"thought\": \"Your justification "
        "for choosing this clip.\"},\n"
        "{\"episode\": 1, \"start_time\": 18, \"end_time\": 125, \"thought\": \"Your "
        "justification for choosing this clip.\"},\n"
        "  ...\n"
        "]\n"
        "</result>\n"
        "Explanation:\n"
        "- episode: episode number.\n"
        "- start_time: starting time of the selected clip, in seconds.\n"
        "- end_time: ending time of the selected clip, in seconds.\n"
        "- thought: your justification for choosing this clip.\n\n";
  os << drama_fields(ctx);
  os << "Dialogue Information:\n";
  for (const auto& line : transcript) {
    nlohmann::json j{{"episode", line.interval.episode_id},
                     {"start_time", static_cast<double>(line.interval.start_ms) / 1000.0},
                     {"end_time", static_cast<double>(line.interval.end_ms) / 1000.0},
                     {"speaker", line.speaker ? *line.speaker : ""},
                     {"text", line.text}};
    os << j.dump() << "\n";
  }
  return make_request(ctx, "end2end_asr", os.str());
}

}  // namespace hive::editing::prompts
