#include <algorithm>

#include <doctest.h>
#include <json.hpp>

#include "hive/core/errors.hpp"
#include "hive/providers/mock.hpp"
#include "hive/understanding/scene_segmentation.hpp"
#include "support/scripted_llm.hpp"

using namespace hive;
using namespace hive::understanding;
using hive::testing::ScriptedLlmProvider;
using nlohmann::json;

namespace {

const PromptContext ctx{"Test Drama", "male", "mock"};
const std::vector<std::int64_t> five_shots{0, 1'000, 2'000, 3'000, 4'000, 5'000};

ScriptedLlmProvider no_refinements() {
  ScriptedLlmProvider llm;
  llm.push_records(json::array());
  return llm;
}

}  // namespace

TEST_CASE("with no merges the scenes equal the shots") {
  providers::ScriptedFusionClassifier classifier;
  auto llm = no_refinements();
  const auto result = segment_scenes(1, five_shots, classifier, llm, ctx);
  CHECK(result.boundaries == five_shots);
  CHECK(result.skipped_directives == 0);
}

TEST_CASE("classifier merges chain transitively") {
  providers::ScriptedFusionClassifier classifier;
  classifier.set_merges(1, {0, 1});  // shot 1+2 and shot 2+3 belong together
  auto llm = no_refinements();
  const auto result = segment_scenes(1, five_shots, classifier, llm, ctx);
  CHECK(result.boundaries == std::vector<std::int64_t>{0, 3'000, 4'000, 5'000});
}

TEST_CASE("a refinement directive merges two adjacent segments") {
  providers::ScriptedFusionClassifier classifier;
  ScriptedLlmProvider llm;
  llm.push_records(json::array({{{"first", 2}, {"second", 3}, {"thought", "same location"}}}));
  const std::vector<std::int64_t> four_shots{0, 1'000, 2'000, 3'000, 4'000};
  const auto result = segment_scenes(1, four_shots, classifier, llm, ctx);
  CHECK(result.boundaries == std::vector<std::int64_t>{0, 1'000, 3'000, 4'000});
  CHECK(result.skipped_directives == 0);
}

TEST_CASE("refinement directives cascade over the stage-two numbering") {
  providers::ScriptedFusionClassifier classifier;
  ScriptedLlmProvider llm;
  llm.push_records(json::array({{{"first", 1}, {"second", 2}, {"thought", "t"}},
                                {{"first", 2}, {"second", 3}, {"thought", "t"}}}));
  const std::vector<std::int64_t> four_shots{0, 1'000, 2'000, 3'000, 4'000};
  const auto result = segment_scenes(1, four_shots, classifier, llm, ctx);
  CHECK(result.boundaries == std::vector<std::int64_t>{0, 3'000, 4'000});
}

TEST_CASE("non-adjacent or out-of-range directives are skipped and counted") {
  providers::ScriptedFusionClassifier classifier;
  ScriptedLlmProvider llm;
  llm.push_records(json::array({{{"first", 1}, {"second", 3}, {"thought", "not adjacent"}},
                                {{"first", 0}, {"second", 1}, {"thought", "below range"}},
                                {{"first", 5}, {"second", 6}, {"thought", "beyond range"}},
                                {{"first", 4}, {"second", 3}, {"thought", "reversed"}}}));
  const auto result = segment_scenes(1, five_shots, classifier, llm, ctx);
  CHECK(result.boundaries == five_shots);
  CHECK(result.skipped_directives == 4);
}

TEST_CASE("every output boundary is one of the input shot boundaries") {
  providers::ScriptedFusionClassifier classifier;
  classifier.set_merges(1, {2});
  ScriptedLlmProvider llm;
  llm.push_records(json::array({{{"first", 1}, {"second", 2}, {"thought", "t"}}}));
  const auto result = segment_scenes(1, five_shots, classifier, llm, ctx);
  REQUIRE(result.boundaries.size() >= 2);
  CHECK(result.boundaries.front() == five_shots.front());
  CHECK(result.boundaries.back() == five_shots.back());
  for (const auto b : result.boundaries) {
    CHECK(std::find(five_shots.begin(), five_shots.end(), b) != five_shots.end());
  }
}

TEST_CASE("shot boundaries must be strictly increasing with at least two entries") {
  providers::ScriptedFusionClassifier classifier;
  auto llm = no_refinements();
  CHECK_THROWS_AS(segment_scenes(1, {0}, classifier, llm, ctx), ValidationError);
  CHECK_THROWS_AS(segment_scenes(1, {0, 1'000, 1'000}, classifier, llm, ctx), ValidationError);
  CHECK_THROWS_AS(segment_scenes(1, {1'000, 0}, classifier, llm, ctx), ValidationError);
}
