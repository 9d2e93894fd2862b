#include "hive/io/ingest.hpp"

#include <regex>
#include <sstream>

#include "json.hpp"

#include "hive/core/errors.hpp"
#include "hive/io/fs.hpp"

namespace hive::io {

namespace {

using nlohmann::json;

std::string line_id(EpisodeId episode_id, std::size_t k) {
  std::ostringstream os;
  os << "ep" << episode_id << "_line" << k;
  return os.str();
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return {};
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

json parse_jsonl_line(const std::string& line, std::size_t line_no, const std::string& origin) {
  const json doc = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    std::ostringstream os;
    os << origin << " line " << line_no << " is not a JSON object";
    throw ParseError(ParseErrorKind::Malformed, os.str());
  }
  return doc;
}

void require_ordered(const std::vector<DialogueLine>& lines, const std::string& origin) {
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    if (lines[i + 1].interval.start_ms < lines[i].interval.start_ms) {
      std::ostringstream os;
      os << origin << ": transcript lines must be ordered by start time (line " << i + 2
         << " starts before line " << i + 1 << ")";
      throw ValidationError(os.str());
    }
  }
}

}  // namespace

std::vector<DialogueLine> parse_srt(const std::string& text, EpisodeId episode_id,
                                    const std::string& origin) {
  static const std::regex timing_re(
      R"((\d{2}):(\d{2}):(\d{2})[,.](\d{3})\s*-->\s*(\d{2}):(\d{2}):(\d{2})[,.](\d{3}))");

  auto to_ms = [](const std::smatch& m, int base) {
    const auto h = std::stoll(m[base].str());
    const auto min = std::stoll(m[base + 1].str());
    const auto s = std::stoll(m[base + 2].str());
    const auto ms = std::stoll(m[base + 3].str());
    return ((h * 60 + min) * 60 + s) * 1000 + ms;
  };

  std::vector<DialogueLine> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    if (trim(raw).empty()) {
      continue;
    }
    // Cue index line (digits only) is optional; the timing line is not.
    std::string timing = raw;
    std::size_t timing_line_no = line_no;
    const std::string trimmed = trim(raw);
    if (trimmed.find_first_not_of("0123456789") == std::string::npos) {
      if (!std::getline(in, timing)) {
        std::ostringstream os;
        os << origin << ": cue " << trimmed << " has no timing line";
        throw ParseError(ParseErrorKind::Malformed, os.str());
      }
      timing_line_no = ++line_no;
    }
    std::smatch m;
    if (!std::regex_search(timing, m, timing_re)) {
      std::ostringstream os;
      os << origin << " line " << timing_line_no << ": expected \"HH:MM:SS,mmm --> HH:MM:SS,mmm\"";
      throw ParseError(ParseErrorKind::Malformed, os.str());
    }
    const std::int64_t start_ms = to_ms(m, 1);
    const std::int64_t end_ms = to_ms(m, 5);
    if (end_ms <= start_ms) {
      std::ostringstream os;
      os << origin << " line " << timing_line_no << ": cue ends before it starts";
      throw ValidationError(os.str());
    }

    std::string cue_text;
    while (std::getline(in, raw)) {
      ++line_no;
      const std::string t = trim(raw);
      if (t.empty()) {
        break;
      }
      cue_text += (cue_text.empty() ? "" : " ") + t;
    }

    DialogueLine line;
    line.id = line_id(episode_id, lines.size() + 1);
    line.interval = {episode_id, start_ms, end_ms};
    line.text = cue_text;
    line.source = DialogueSource::Asr;
    lines.push_back(std::move(line));
  }
  require_ordered(lines, origin);
  return lines;
}

std::vector<DialogueLine> parse_transcript_jsonl(const std::string& text, EpisodeId episode_id,
                                                 const std::string& origin) {
  std::vector<DialogueLine> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (trim(raw).empty()) {
      continue;
    }
    const json doc = parse_jsonl_line(raw, line_no, origin);
    std::ostringstream at;
    at << origin << " line " << line_no;
    if (!doc.contains("start_ms") || !doc["start_ms"].is_number_integer() ||
        !doc.contains("end_ms") || !doc["end_ms"].is_number_integer() ||
        !doc.contains("text") || !doc["text"].is_string()) {
      throw ValidationError(at.str() + ": needs {start_ms: int, end_ms: int, text: string}");
    }
    DialogueLine line;
    line.id = line_id(episode_id, lines.size() + 1);
    line.interval = {episode_id, doc["start_ms"].get<std::int64_t>(),
                     doc["end_ms"].get<std::int64_t>()};
    if (line.interval.start_ms < 0) {
      throw ValidationError(at.str() + ": start_ms must be non-negative");
    }
    if (line.interval.end_ms <= line.interval.start_ms) {
      throw ValidationError(at.str() + ": end_ms must be greater than start_ms");
    }
    line.text = doc["text"].get<std::string>();
    if (doc.contains("speaker") && doc["speaker"].is_string() &&
        !doc["speaker"].get<std::string>().empty()) {
      line.speaker = doc["speaker"].get<std::string>();
    }
    line.source = DialogueSource::Asr;
    lines.push_back(std::move(line));
  }
  require_ordered(lines, origin);
  return lines;
}

std::vector<providers::OcrLine> parse_ocr_jsonl(const std::string& text,
                                                const std::string& origin) {
  std::vector<providers::OcrLine> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (trim(raw).empty()) {
      continue;
    }
    const json doc = parse_jsonl_line(raw, line_no, origin);
    std::ostringstream at;
    at << origin << " line " << line_no;
    if (!doc.contains("timestamp_ms") || !doc["timestamp_ms"].is_number_integer() ||
        !doc.contains("text") || !doc["text"].is_string()) {
      throw ValidationError(at.str() + ": needs {timestamp_ms: int, text: string}");
    }
    providers::OcrLine line;
    line.timestamp_ms = doc["timestamp_ms"].get<std::int64_t>();
    if (line.timestamp_ms < 0) {
      throw ValidationError(at.str() + ": timestamp_ms must be non-negative");
    }
    line.text = doc["text"].get<std::string>();
    if (doc.contains("region")) {
      if (!doc["region"].is_array() || doc["region"].size() != 4) {
        throw ValidationError(at.str() + ": region must be [x1, y1, x2, y2]");
      }
      for (std::size_t i = 0; i < 4; ++i) {
        if (!doc["region"][i].is_number()) {
          throw ValidationError(at.str() + ": region must hold numbers");
        }
        line.region[i] = doc["region"][i].get<double>();
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<providers::FaceSample> parse_faces_jsonl(const std::string& text,
                                                     const std::string& origin) {
  std::vector<providers::FaceSample> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (trim(raw).empty()) {
      continue;
    }
    const json doc = parse_jsonl_line(raw, line_no, origin);
    std::ostringstream at;
    at << origin << " line " << line_no;
    if (!doc.contains("timestamp_ms") || !doc["timestamp_ms"].is_number_integer() ||
        !doc.contains("embedding") || !doc["embedding"].is_array() || doc["embedding"].empty()) {
      throw ValidationError(at.str() +
                            ": needs {timestamp_ms: int, embedding: non-empty number array}");
    }
    providers::FaceSample sample;
    sample.timestamp_ms = doc["timestamp_ms"].get<std::int64_t>();
    for (const auto& v : doc["embedding"]) {
      if (!v.is_number()) {
        throw ValidationError(at.str() + ": embedding must hold numbers");
      }
      sample.embedding.push_back(v.get<double>());
    }
    out.push_back(std::move(sample));
  }
  return out;
}

std::vector<std::int64_t> parse_shots_json(const std::string& text, const std::string& origin) {
  const json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ParseError(ParseErrorKind::Malformed, origin + " is not valid JSON");
  }
  if (!doc.is_object() || !doc.contains("boundaries_ms") || !doc["boundaries_ms"].is_array()) {
    throw ValidationError(origin + ": must be {boundaries_ms: [int...]}");
  }
  std::vector<std::int64_t> out;
  for (const auto& v : doc["boundaries_ms"]) {
    if (!v.is_number_integer()) {
      throw ValidationError(origin + ": boundaries_ms must hold integers");
    }
    out.push_back(v.get<std::int64_t>());
  }
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (out[i] >= out[i + 1]) {
      throw ValidationError(origin + ": boundaries_ms must be strictly ascending");
    }
  }
  return out;
}

UnderstandJob load_understand_job(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  const std::string origin = path.string();
  const json doc = json::parse(read_file(path), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ParseError(ParseErrorKind::Malformed, "job file " + origin + " is not valid JSON");
  }
  if (!doc.is_object() || !doc.contains("episodes") || !doc["episodes"].is_array() ||
      doc["episodes"].empty()) {
    throw ValidationError("job file " + origin + ": needs a non-empty episodes array");
  }

  UnderstandJob job;
  if (doc.contains("title") && doc["title"].is_string()) {
    job.title = doc["title"].get<std::string>();
  }
  if (doc.contains("audience")) {
    if (!doc["audience"].is_string()) {
      throw ValidationError("job file " + origin + ": /audience must be a string");
    }
    job.audience = doc["audience"].get<std::string>();
    if (job.audience != "male" && job.audience != "female") {
      throw ValidationError("job file " + origin + ": /audience must be \"male\" or \"female\"");
    }
  }

  const fs::path base = path.parent_path();
  auto resolve = [&](const std::string& rel) { return base.empty() ? fs::path(rel) : base / rel; };

  for (std::size_t e = 0; e < doc["episodes"].size(); ++e) {
    std::ostringstream at;
    at << "job file " << origin << ": /episodes/" << e;
    const auto& ep_node = doc["episodes"][e];
    if (!ep_node.is_object() || !ep_node.contains("episode_id") ||
        !ep_node["episode_id"].is_number_integer() || !ep_node.contains("duration_ms") ||
        !ep_node["duration_ms"].is_number_integer() || !ep_node.contains("asr") ||
        !ep_node["asr"].is_string()) {
      throw ValidationError(at.str() +
                            " needs {episode_id: int, duration_ms: int, asr: path}");
    }

    understanding::EpisodeInputs inputs;
    inputs.episode_id = ep_node["episode_id"].get<EpisodeId>();
    inputs.duration_ms = ep_node["duration_ms"].get<std::int64_t>();

    const fs::path asr_path = resolve(ep_node["asr"].get<std::string>());
    const std::string asr_text = read_file(asr_path);
    if (asr_path.extension() == ".srt") {
      inputs.asr = parse_srt(asr_text, inputs.episode_id, asr_path.string());
    } else {
      inputs.asr = parse_transcript_jsonl(asr_text, inputs.episode_id, asr_path.string());
    }

    auto optional_path = [&](const char* key) -> std::optional<fs::path> {
      if (!ep_node.contains(key)) {
        return std::nullopt;
      }
      if (!ep_node[key].is_string()) {
        throw ValidationError(at.str() + "/" + key + " must be a path string");
      }
      return resolve(ep_node[key].get<std::string>());
    };
    if (const auto p = optional_path("ocr")) {
      inputs.ocr = parse_ocr_jsonl(read_file(*p), p->string());
    }
    if (const auto p = optional_path("shots")) {
      inputs.shot_boundaries = parse_shots_json(read_file(*p), p->string());
    }
    if (const auto p = optional_path("faces")) {
      inputs.faces = parse_faces_jsonl(read_file(*p), p->string());
    }
    job.episodes.push_back(std::move(inputs));
  }
  return job;
}

}  // namespace hive::io
