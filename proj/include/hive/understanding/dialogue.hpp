#pragma once

#include <cstdint>
#include <vector>

#include "hive/core/types.hpp"
#include "hive/providers/provider.hpp"
#include "hive/understanding/prompts.hpp"

namespace hive::understanding {

struct CorrectionOutcome {
  std::vector<DialogueLine> lines;  // same size and order as the input
  std::vector<bool> rejected;      // true where the reply was unusable and the original was kept
  int rejected_count = 0;
};

// Attaches each OCR line to the ASR lines whose padded interval
// [start - slack, end + slack] contains its timestamp. result[i] lists the
// 0-based ASR indices matching ocr[i].
std::vector<std::vector<int>> match_ocr_to_asr(const std::vector<DialogueLine>& asr,
                                               const std::vector<providers::OcrLine>& ocr,
                                               std::int64_t slack_ms = 250);

// LLM-corrects one episode's ASR transcript against OCR subtitles. The reply
// must contain one record per input line, positionally aligned, with the
// original start/end copied bit-for-bit; lines whose record tampers with the
// interval are kept unchanged and flagged. A reply with the wrong record
// count rejects the whole batch (every line kept, every flag set). Accepted
// lines adopt the replied speaker/text and are marked Corrected.
CorrectionOutcome correct_dialogue(const std::vector<DialogueLine>& asr,
                                   const std::vector<providers::OcrLine>& ocr,
                                   providers::LlmProvider& llm, const PromptContext& ctx);

}  // namespace hive::understanding
