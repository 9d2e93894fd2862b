#include "hive/understanding/dialogue.hpp"

#include <sstream>

#include "hive/core/errors.hpp"
#include "hive/core/log.hpp"
#include "hive/understanding/result_block.hpp"

namespace hive::understanding {

std::vector<std::vector<int>> match_ocr_to_asr(const std::vector<DialogueLine>& asr,
                                               const std::vector<providers::OcrLine>& ocr,
                                               std::int64_t slack_ms) {
  if (slack_ms < 0) {
    throw ValidationError("match_ocr_to_asr: slack_ms must be non-negative");
  }
  std::vector<std::vector<int>> matches(ocr.size());
  for (std::size_t i = 0; i < ocr.size(); ++i) {
    for (std::size_t k = 0; k < asr.size(); ++k) {
      const auto& iv = asr[k].interval;
      if (ocr[i].timestamp_ms >= iv.start_ms - slack_ms &&
          ocr[i].timestamp_ms <= iv.end_ms + slack_ms) {
        matches[i].push_back(static_cast<int>(k));
      }
    }
  }
  return matches;
}

CorrectionOutcome correct_dialogue(const std::vector<DialogueLine>& asr,
                                   const std::vector<providers::OcrLine>& ocr,
                                   providers::LlmProvider& llm, const PromptContext& ctx) {
  CorrectionOutcome out;
  out.lines = asr;
  out.rejected.assign(asr.size(), false);
  if (asr.empty()) {
    return out;
  }
  for (std::size_t k = 0; k + 1 < asr.size(); ++k) {
    if (asr[k + 1].interval.start_ms < asr[k].interval.start_ms) {
      throw ValidationError("correct_dialogue: ASR lines must be ordered by start time");
    }
  }

  const auto matches = match_ocr_to_asr(asr, ocr);
  const auto request = prompts::correction(ctx, asr, ocr, matches);
  static const std::vector<FieldSpec> schema = {
      {"start_ms", FieldKind::Integer},
      {"end_ms", FieldKind::Integer},
      {"speaker", FieldKind::String},
      {"text", FieldKind::String},
  };
  const ResultBlock block = call_for_records(llm, request, schema);

  if (block.records.size() != asr.size()) {
    std::ostringstream os;
    os << "dialogue correction reply has " << block.records.size() << " records for "
       << asr.size() << " lines; keeping the whole batch uncorrected";
    log::warn(os.str());
    out.rejected.assign(asr.size(), true);
    out.rejected_count = static_cast<int>(asr.size());
    return out;
  }

  for (std::size_t k = 0; k < asr.size(); ++k) {
    const auto& rec = block.records[k];
    const auto start = rec.at("start_ms").get<std::int64_t>();
    const auto end = rec.at("end_ms").get<std::int64_t>();
    if (start != asr[k].interval.start_ms || end != asr[k].interval.end_ms) {
      std::ostringstream os;
      os << "correction for line " << k << " altered the interval (" << start << ", " << end
         << ") != (" << asr[k].interval.start_ms << ", " << asr[k].interval.end_ms
         << "); keeping the original";
      log::warn(os.str());
      out.rejected[k] = true;
      ++out.rejected_count;
      continue;
    }
    DialogueLine& line = out.lines[k];
    const auto speaker = rec.at("speaker").get<std::string>();
    line.speaker = speaker.empty() ? std::nullopt : std::optional<CharacterId>(speaker);
    line.text = rec.at("text").get<std::string>();
    line.source = DialogueSource::Corrected;
  }
  return out;
}

}  // namespace hive::understanding
