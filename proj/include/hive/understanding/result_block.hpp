#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hive/providers/provider.hpp"

namespace hive::understanding {

enum class FieldKind { String, Integer, Boolean, Number, StringArray };

struct FieldSpec {
  std::string name;
  FieldKind kind = FieldKind::String;
  bool required = true;
  // Inclusive bounds, checked for Integer and Number fields.
  std::optional<double> min;
  std::optional<double> max;
};

struct ResultBlock {
  std::vector<nlohmann::json> records;
};

// Extracts the first <result>...</result> span from llm_output, parses it as
// a JSON array and validates every record against the schema. Extra keys are
// tolerated. Throws ParseError with kind NoResultBlock, Malformed or
// SchemaViolation (the latter carrying the offending record index).
ResultBlock parse_result_block(const std::string& llm_output,
                               const std::vector<FieldSpec>& schema);

// Re-wraps records in tags such that parse_result_block round-trips.
std::string serialize_result_block(const ResultBlock& block);

// Invokes the provider and parses its reply, retrying up to max_retries extra
// times when the reply fails to parse. Provider errors are not retried.
ResultBlock call_for_records(providers::LlmProvider& llm, const providers::LlmRequest& request,
                             const std::vector<FieldSpec>& schema, int max_retries = 2);

}  // namespace hive::understanding
