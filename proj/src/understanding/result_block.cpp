#include "hive/understanding/result_block.hpp"

#include <sstream>

#include "hive/core/errors.hpp"
#include "hive/core/log.hpp"

namespace hive::understanding {

namespace {

using nlohmann::json;

const char* kind_name(FieldKind kind) {
  switch (kind) {
    case FieldKind::String: return "string";
    case FieldKind::Integer: return "integer";
    case FieldKind::Boolean: return "boolean";
    case FieldKind::Number: return "number";
    case FieldKind::StringArray: return "array of strings";
  }
  return "?";
}

bool kind_matches(const json& value, FieldKind kind) {
  switch (kind) {
    case FieldKind::String:
      return value.is_string();
    case FieldKind::Integer:
      return value.is_number_integer();
    case FieldKind::Boolean:
      return value.is_boolean();
    case FieldKind::Number:
      return value.is_number();
    case FieldKind::StringArray:
      if (!value.is_array()) return false;
      for (const json& item : value) {
        if (!item.is_string()) return false;
      }
      return true;
  }
  return false;
}

void validate_record(const json& record, const std::vector<FieldSpec>& schema, std::size_t index) {
  auto violation = [index](const std::string& what) {
    std::ostringstream os;
    os << "record " << index << ": " << what;
    throw ParseError(ParseErrorKind::SchemaViolation, os.str(), index);
  };
  if (!record.is_object()) {
    violation("not a JSON object");
  }
  for (const FieldSpec& field : schema) {
    if (!record.contains(field.name)) {
      if (field.required) violation("missing required key \"" + field.name + "\"");
      continue;
    }
    const json& value = record.at(field.name);
    if (!kind_matches(value, field.kind)) {
      violation("key \"" + field.name + "\" must be a " + kind_name(field.kind));
    }
    if (field.kind == FieldKind::Integer || field.kind == FieldKind::Number) {
      const double v = value.get<double>();
      if ((field.min && v < *field.min) || (field.max && v > *field.max)) {
        violation("key \"" + field.name + "\" out of range");
      }
    }
  }
}

}  // namespace

ResultBlock parse_result_block(const std::string& llm_output,
                               const std::vector<FieldSpec>& schema) {
  static const std::string open_tag = "<result>";
  static const std::string close_tag = "</result>";

  const std::size_t open = llm_output.find(open_tag);
  if (open == std::string::npos) {
    throw ParseError(ParseErrorKind::NoResultBlock, "no <result> tag in LLM output");
  }
  const std::size_t body = open + open_tag.size();
  const std::size_t close = llm_output.find(close_tag, body);
  if (close == std::string::npos) {
    throw ParseError(ParseErrorKind::NoResultBlock, "no closing </result> tag in LLM output");
  }

  const std::string payload = llm_output.substr(body, close - body);
  json parsed = json::parse(payload, nullptr, false);
  if (parsed.is_discarded()) {
    throw ParseError(ParseErrorKind::Malformed, "result block is not valid JSON");
  }
  if (!parsed.is_array()) {
    throw ParseError(ParseErrorKind::Malformed, "result block is not a JSON array");
  }

  ResultBlock block;
  block.records.reserve(parsed.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    validate_record(parsed[i], schema, i);
    block.records.push_back(parsed[i]);
  }
  return block;
}

std::string serialize_result_block(const ResultBlock& block) {
  json array = json::array();
  for (const json& record : block.records) {
    array.push_back(record);
  }
  return "<result>" + array.dump() + "</result>";
}

ResultBlock call_for_records(providers::LlmProvider& llm, const providers::LlmRequest& request,
                             const std::vector<FieldSpec>& schema, int max_retries) {
  for (int attempt = 0;; ++attempt) {
    const providers::LlmResponse response = llm.complete(request);
    try {
      return parse_result_block(response.content, schema);
    } catch (const ParseError& e) {
      if (attempt >= max_retries) throw;
      std::ostringstream os;
      os << "task " << request.task << ": reply failed to parse (" << e.what() << "), retry "
         << attempt + 1 << "/" << max_retries;
      log::warn(os.str());
    }
  }
}

}  // namespace hive::understanding
