#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hive/core/types.hpp"
#include "hive/providers/provider.hpp"
#include "hive/understanding/pipeline.hpp"

namespace hive::io {

// SubRip transcript -> dialogue lines. Cue text spanning multiple lines is
// joined with spaces; cue indices are ignored beyond ordering. Line ids are
// "ep<episode>_line<k>" with k 1-based.
std::vector<DialogueLine> parse_srt(const std::string& text, EpisodeId episode_id,
                                    const std::string& origin);

// JSONL transcript: {start_ms, end_ms, text, speaker?} per line.
std::vector<DialogueLine> parse_transcript_jsonl(const std::string& text, EpisodeId episode_id,
                                                 const std::string& origin);

// JSONL OCR dump: {timestamp_ms, text, region?} per line, region = [x1,y1,x2,y2].
std::vector<providers::OcrLine> parse_ocr_jsonl(const std::string& text,
                                                const std::string& origin);

// JSONL face samples: {timestamp_ms, embedding: [float...]} per line.
std::vector<providers::FaceSample> parse_faces_jsonl(const std::string& text,
                                                     const std::string& origin);

// Shot boundary file: {"boundaries_ms": [..]} with ascending timestamps.
std::vector<std::int64_t> parse_shots_json(const std::string& text, const std::string& origin);

// Understanding job file: {title?, audience?, episodes: [{episode_id,
// duration_ms, asr, ocr?, shots?, faces?}]}. Referenced paths resolve
// relative to the job file directory; .srt transcripts are parsed as SubRip,
// anything else as JSONL.
struct UnderstandJob {
  std::string title;
  std::string audience = "male";
  std::vector<understanding::EpisodeInputs> episodes;
};

UnderstandJob load_understand_job(const std::filesystem::path& path);

}  // namespace hive::io
