#include <doctest.h>

#include "hive/core/errors.hpp"
#include "hive/understanding/result_block.hpp"
#include "support/scripted_llm.hpp"

using namespace hive;
using namespace hive::understanding;

namespace {

const std::vector<FieldSpec> score_schema = {
    {"episode", FieldKind::Integer},
    {"scene_id", FieldKind::Integer},
    {"reason", FieldKind::String, /*required=*/false},
    {"score", FieldKind::Integer, /*required=*/true, 0.0},
};

ParseErrorKind kind_of(const std::string& text, const std::vector<FieldSpec>& schema) {
  try {
    parse_result_block(text, schema);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseErrorKind::Malformed;
}

}  // namespace

TEST_CASE("a single scoring record parses with all fields") {
  const auto block = parse_result_block(
      R"(<result>[{"episode":1,"scene_id":1,"reason":"x","score":3}]</result>)", score_schema);
  REQUIRE(block.records.size() == 1);
  CHECK(block.records[0].at("score").get<int>() == 3);
  CHECK(block.records[0].at("reason").get<std::string>() == "x");
}

TEST_CASE("an empty result array parses to an empty record list") {
  CHECK(parse_result_block("<result>[]</result>", score_schema).records.empty());
}

TEST_CASE("surrounding chatter is tolerated and only the first block is read") {
  const auto block = parse_result_block(
      "Sure! Here are the scores.\n<result>[{\"episode\":1,\"scene_id\":2,\"score\":0}]</result>\n"
      "<result>[{\"episode\":9,\"scene_id\":9,\"score\":9}]</result>",
      score_schema);
  REQUIRE(block.records.size() == 1);
  CHECK(block.records[0].at("scene_id").get<int>() == 2);
}

TEST_CASE("missing tags raise NoResultBlock") {
  CHECK(kind_of("no tags here", score_schema) == ParseErrorKind::NoResultBlock);
  CHECK(kind_of("<result>[1,2,3]", score_schema) == ParseErrorKind::NoResultBlock);
}

TEST_CASE("invalid JSON or a non-array payload raise Malformed") {
  CHECK(kind_of("<result>[{]</result>", score_schema) == ParseErrorKind::Malformed);
  CHECK(kind_of("<result>{\"episode\":1}</result>", score_schema) == ParseErrorKind::Malformed);
  CHECK(kind_of("<result>\"text\"</result>", score_schema) == ParseErrorKind::Malformed);
}

TEST_CASE("schema violations carry the offending record index") {
  const std::string two_records =
      R"(<result>[{"episode":1,"scene_id":1,"score":0},{"episode":1,"scene_id":2}]</result>)";
  try {
    parse_result_block(two_records, score_schema);
    FAIL("expected a schema violation");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::SchemaViolation);
    CHECK(e.record_index() == std::size_t{1});
  }
}

TEST_CASE("field kinds and bounds are enforced") {
  CHECK(kind_of(R"(<result>[{"episode":"one","scene_id":1,"score":0}]</result>)", score_schema) ==
        ParseErrorKind::SchemaViolation);
  CHECK(kind_of(R"(<result>[{"episode":1,"scene_id":1,"score":-1}]</result>)", score_schema) ==
        ParseErrorKind::SchemaViolation);
  CHECK(kind_of(R"(<result>[{"episode":1,"scene_id":1,"score":1.5}]</result>)", score_schema) ==
        ParseErrorKind::SchemaViolation);
  CHECK(kind_of(R"(<result>[42]</result>)", score_schema) == ParseErrorKind::SchemaViolation);

  const std::vector<FieldSpec> vote_schema = {
      {"speaker", FieldKind::String},
      {"confidence", FieldKind::Number, /*required=*/true, 0.0, 1.0},
  };
  CHECK(kind_of(R"(<result>[{"speaker":"A","confidence":1.2}]</result>)", vote_schema) ==
        ParseErrorKind::SchemaViolation);
  CHECK(parse_result_block(R"(<result>[{"speaker":"A","confidence":0.5}]</result>)", vote_schema)
            .records.size() == 1);
}

TEST_CASE("extra keys are tolerated") {
  const auto block = parse_result_block(
      R"(<result>[{"episode":1,"scene_id":1,"score":2,"mood":"tense"}]</result>)", score_schema);
  CHECK(block.records[0].at("mood").get<std::string>() == "tense");
}

TEST_CASE("serialize then parse round-trips the records") {
  const auto block = parse_result_block(
      R"(<result>[{"episode":1,"scene_id":1,"score":3},{"episode":1,"scene_id":2,"score":0}]</result>)",
      score_schema);
  const auto reparsed = parse_result_block(serialize_result_block(block), score_schema);
  REQUIRE(reparsed.records.size() == block.records.size());
  for (std::size_t i = 0; i < block.records.size(); ++i) {
    CHECK(reparsed.records[i] == block.records[i]);
  }
}

TEST_CASE("call_for_records retries on parse failures only") {
  using hive::testing::ScriptedLlmProvider;
  providers::LlmRequest request;
  request.task = "highlight_scoring";
  request.model = "m";
  request.messages = {{"user", "score"}};

  SUBCASE("a malformed reply is retried and the repaired reply wins") {
    ScriptedLlmProvider llm({"garbage", R"(<result>[{"episode":1,"scene_id":1,"score":1}]</result>)"});
    const auto block = call_for_records(llm, request, score_schema);
    CHECK(block.records.size() == 1);
    CHECK(llm.requests.size() == 2);
  }

  SUBCASE("three bad replies exhaust the retries") {
    ScriptedLlmProvider llm({"bad", "worse", "worst"});
    CHECK_THROWS_AS(call_for_records(llm, request, score_schema), ParseError);
    CHECK(llm.requests.size() == 3);
  }

  SUBCASE("provider failures propagate immediately") {
    ScriptedLlmProvider llm;  // empty queue: complete() throws ProviderError
    CHECK_THROWS_AS(call_for_records(llm, request, score_schema), ProviderError);
    CHECK(llm.requests.size() == 1);
  }
}
