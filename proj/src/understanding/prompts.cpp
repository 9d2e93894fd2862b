#include "hive/understanding/prompts.hpp"

#include <sstream>

#include "json.hpp"

namespace hive::understanding::prompts {

namespace {

std::string drama_header(const PromptContext& ctx) {
  std::ostringstream os;
  os << "Drama: " << ctx.title << "\n";
  os << "Target audience: " << (ctx.audience == "female" ? "Female" : "Male") << "\n\n";
  return os.str();
}

providers::LlmRequest make_request(const PromptContext& ctx, std::string task, std::string body) {
  providers::LlmRequest req;
  req.task = std::move(task);
  req.model = ctx.model;
  req.temperature = 0.0;
  req.messages.push_back({"user", std::move(body)});
  return req;
}

std::string profile_summary(const CharacterProfile& profile) {
  std::ostringstream os;
  os << profile.id;
  if (profile.display_name && *profile.display_name != profile.id) {
    os << " (" << *profile.display_name << ")";
  }
  os << ":";
  if (profile.descriptors.empty()) {
    os << " (no description yet)";
  } else {
    for (std::size_t i = 0; i < profile.descriptors.size(); ++i) {
      os << (i == 0 ? " " : "; ") << profile.descriptors[i];
    }
  }
  return os.str();
}

std::string dialogue_record_json(const DialogueLine& line) {
  nlohmann::json j{{"start_ms", line.interval.start_ms},
                   {"end_ms", line.interval.end_ms},
                   {"speaker", line.speaker ? *line.speaker : ""},
                   {"text", line.text}};
  return j.dump();
}

}  // namespace

providers::LlmRequest correction(const PromptContext& ctx, const std::vector<DialogueLine>& asr,
                                 const std::vector<providers::OcrLine>& ocr,
                                 const std::vector<std::vector<int>>& ocr_matches) {
  std::ostringstream os;
  os << drama_header(ctx);
  os << "## Role\n"
        "You are an expert in video dialogue content recognition. You're provided with the ASR "
        "(Automatic Speech Recognition) results and OCR (Optical Character Recognition) results "
        "from the same video, both with associated timestamp information. Your task is to "
        "cross-reference these two inputs to correct the ASR results to produce the most accurate "
        "speaker identification and dialogue content. The time information in the ASR must remain "
        "unchanged.\n"
        "## Input\n"
        "- ASR: Includes timestamps, speaker identification, and spoken content. Due to potential "
        "inaccuracies in detection, both the speaker and the dialogue content might have errors "
        "and require correction.\n"
        "- OCR: Includes timestamps and recognized text from the video's visuals. While OCR text "
        "is generally accurate, it may occasionally contain irrelevant visual noise (e.g., text "
        "from objects or advertisements), which requires careful filtering.\n"
        "## Output\n"
        "- Corrected ASR: Includes timestamps, corrected speaker identification, and dialogue "
        "content. Time remains unchanged from the original ASR. Corrections are made using OCR "
        "where inaccuracies in speaker or content are evident, while irrelevant OCR text is "
        "excluded. Speaker labels are adjusted only for clear mistakes to ensure accuracy.\n"
        "## Requirements\n"
        "1. Cross-reference the timestamp in OCR with the timestamp in ASR to adjust the ASR "
        "speaker and spoken dialogue content.\n"
        "2. Correct typical errors such as phonetic spelling issues in ASR by using OCR text with "
        "matching timestamps.\n"
        "3. Ensure that the corrected ASR speaker and content align logically within the context "
        "of the video.\n"
        "4. Maintain the original timestamp information from the ASR, regardless of corrections "
        "made.\n"
        "5. Filter out irrelevant OCR content such as noise, and avoid overwriting ASR with "
        "unrelated visual information.\n"
        "Reply with a <result>...</result> block containing a JSON array with exactly one record "
        "per ASR line, in the same order, each of the form "
        "{\"start_ms\": int, \"end_ms\": int, \"speaker\": string, \"text\": string}. "
        "start_ms and end_ms must be copied verbatim from the matching ASR line.\n"
        "ASR:\n";
  for (const auto& line : asr) {
    os << dialogue_record_json(line) << "\n";
  }
  os << "OCR:\n";
  for (std::size_t i = 0; i < ocr.size(); ++i) {
    nlohmann::json j{{"timestamp_ms", ocr[i].timestamp_ms}, {"text", ocr[i].text}};
    if (i < ocr_matches.size() && !ocr_matches[i].empty()) {
      j["asr_lines"] = ocr_matches[i];
    }
    os << j.dump() << "\n";
  }
  if (ocr.empty()) {
    os << "(none)\n";
  }
  return make_request(ctx, "dialogue_correction", os.str());
}

providers::LlmRequest caption(const PromptContext& ctx, const Scene& scene,
                              const std::vector<CharacterProfile>& characters,
                              const std::vector<DialogueLine>& dialogue,
                              const std::string& prior_context) {
  std::ostringstream os;
  os << drama_header(ctx);
  os << "## Role\n"
        "You are a professional film and drama captioning expert. Your task is to produce "
        "accurate and coherent narrative descriptions of key scenes in a video segment by "
        "integrating multimodal inputs while maintaining logical plot continuity.\n"
        "## Input\n"
        "- Current Video Segment: The specific video clip or sampled frames corresponding to the "
        "segment that needs to be summarized.\n"
        "- Character Information: A list of characters appearing in this segment and their roles "
        "in the drama.\n"
        "- Dialogue: A transcript of all dialogues spoken within this scene, including timestamps "
        "and speaker attributions.\n"
        "- Previous Segment Context: A concise overview of important events or character dynamics "
        "from the previous segment.\n"
        "## Output\n"
        "- Comprehensive Description: A coherent and context-aware summary of the segment that "
        "integrates characters, dialogue, and contextual information to reflect its significance "
        "within the broader narrative. Key events, character interactions, and logical plot "
        "connections should be naturally framed, avoiding verbatim dialogue and focusing on "
        "emotional and story progression.\n"
        "## Requirements\n"
        "1. Holistic Scene Summarization: Generate a coherent narrative that captures key events, "
        "character motivations, relationships, and emotional flow while emphasizing the scene's "
        "role in advancing the plot or developing character arcs.\n"
        "2. Continuity Maintenance: Ensure the summary remains consistent with the previous "
        "context, connecting past interactions or unresolved conflicts to the current scene "
        "within the broader storyline.\n"
        "3. Incorporate Dialogue and Key Interactions: Integrate key dialogues naturally into the "
        "description to highlight important developments, reframing them fluently into the "
        "narrative without listing them verbatim.\n"
        "4. Context Sensitivity: Use all provided inputs to create a summary aligned with both "
        "scene details and the overall plot progression.\n"
        "Reply with the description text only.\n";
  os << "Current Video Segment:\n"
     << "[Episode " << scene.episode_id << " | Scene " << scene.scene_id << "] "
     << scene.interval.start_ms << "ms - " << scene.interval.end_ms << "ms\n";
  os << "Character Information:\n";
  for (const auto& c : characters) {
    os << "- " << profile_summary(c) << "\n";
  }
  if (characters.empty()) {
    os << "(none known yet)\n";
  }
  os << "Dialogue:\n";
  for (const auto& line : dialogue) {
    os << dialogue_record_json(line) << "\n";
  }
  if (dialogue.empty()) {
    os << "(no dialogue in this scene)\n";
  }
  os << "Previous Segment Context:\n" << (prior_context.empty() ? "(start of drama)" : prior_context) << "\n";
  return make_request(ctx, "captioning", os.str());
}

providers::LlmRequest scene_refinement(const PromptContext& ctx, EpisodeId episode_id,
                                       const std::vector<TimeInterval>& segments) {
  std::ostringstream os;
  os << drama_header(ctx);
  os << "## Role\n"
        "You are a video editing expert. You are given consecutive scene segments of episode "
     << episode_id
     << " produced by shot-boundary detection and pairwise fusion. Some adjacent segments still "
        "belong to the same scene and should be merged.\n"
        "## Requirements\n"
        "1. Only adjacent segments may be merged; second must equal first + 1.\n"
        "2. Segment numbers refer to the list below and are 1-based.\n"
        "3. If no merges are needed, reply with an empty array.\n"
        "Reply with a <result>...</result> block containing a JSON array of records of the form "
        "{\"first\": int, \"second\": int, \"thought\": string}.\n"
        "Segments:\n";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    os << "Segment " << (i + 1) << ": " << segments[i].start_ms << "ms - " << segments[i].end_ms
       << "ms\n";
  }
  return make_request(ctx, "scene_refinement", os.str());
}

providers::LlmRequest speaker_attribution(const PromptContext& ctx, const DialogueLine& line,
                                          const std::string& surrounding_dialogue,
                                          const std::vector<CharacterProfile>& characters,
                                          int voter_index) {
  std::ostringstream os;
  os << drama_header(ctx);
  os << "## Role\n"
        "You are dialogue analyst #"
     << voter_index
     << " in a voting panel. Attribute the target dialogue line to one of the known characters, "
        "or abstain when unsure.\n"
        "## Input\n"
        "- Known characters with descriptions.\n"
        "- Surrounding dialogue for context.\n"
        "- The target line.\n"
        "Reply with a <result>...</result> block containing a JSON array with exactly one record "
        "of the form {\"speaker\": string, \"confidence\": number, \"thought\": string}. "
        "confidence must lie in [0, 1]; use an empty speaker string to abstain.\n"
        "Characters:\n";
  for (const auto& c : characters) {
    os << "- " << profile_summary(c) << "\n";
  }
  os << "Context:\n" << surrounding_dialogue << "\n";
  os << "Target line:\n" << dialogue_record_json(line) << "\n";
  return make_request(ctx, "speaker_attribution", os.str());
}

providers::LlmRequest character_extraction(const PromptContext& ctx, EpisodeId episode_id,
                                           const std::vector<std::string>& narrations,
                                           const std::vector<int>& known_cluster_ids) {
  std::ostringstream os;
  os << drama_header(ctx);
  os << "## Role\n"
        "You are a story analyst. From the scene narrations of episode "
     << episode_id
     << ", extract the characters that appear, with a short description of each character's role "
        "and personality so far.\n"
        "## Requirements\n"
        "1. Use a stable name for each character; reuse names already mentioned in narrations.\n"
        "2. face_cluster_id, when given, must be one of the known cluster ids listed below.\n"
        "Reply with a <result>...</result> block containing a JSON array of records of the form "
        "{\"name\": string, \"description\": string, \"face_cluster_id\": int (optional)}.\n"
        "Known face cluster ids:";
  for (int id : known_cluster_ids) {
    os << " " << id;
  }
  if (known_cluster_ids.empty()) {
    os << " (none)";
  }
  os << "\nNarrations:\n";
  for (std::size_t i = 0; i < narrations.size(); ++i) {
    os << "Scene " << (i + 1) << ": " << narrations[i] << "\n";
  }
  return make_request(ctx, "character_extraction", os.str());
}

}  // namespace hive::understanding::prompts
