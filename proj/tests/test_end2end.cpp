#include <doctest.h>
#include <json.hpp>

#include "hive/core/errors.hpp"
#include "hive/editing/end2end.hpp"
#include "support/oracles.hpp"
#include "support/scripted_llm.hpp"

using namespace hive;
using namespace hive::editing;
using hive::testing::make_sequence;
using hive::testing::ScriptedLlmProvider;
using nlohmann::json;

namespace {

const PromptContext ctx{"Test Drama", "female", "mock"};

HighlightRuleSet test_rules() {
  HighlightRuleSet rules;
  rules.audience = Audience::Female;
  rules.rules = {{"love at first sight", 3}};
  return rules;
}

std::vector<DialogueLine> transcript_for(const SceneSequence& video) {
  std::vector<DialogueLine> lines;
  for (const auto& scene : video.scenes()) {
    DialogueLine line;
    line.id = "l" + std::to_string(lines.size());
    line.interval = {scene.episode_id, scene.interval.start_ms, scene.interval.start_ms + 900};
    line.text = "spoken in " + scene.narration;
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

TEST_CASE("narration mode keeps exactly the scenes the reply names") {
  const auto video = make_sequence({4});
  ScriptedLlmProvider llm;
  llm.push_records(json::array({{{"episode", 1}, {"scene_id", 1}, {"thought", "hook"}},
                                {{"episode", 1}, {"scene_id", 2}, {"thought", "payoff"}}}));
  const auto plan = end2end_edit(video, {}, test_rules(), llm, ctx, End2EndMode::Narration);
  CHECK(plan.plan_id == "plan_0001");
  CHECK(plan.provenance.kind == "end2end_narration");
  REQUIRE(plan.cuts.size() == 2);
  CHECK(plan.cuts[0] == TimeInterval{1, 0, 10'000});
  CHECK(plan.cuts[1] == TimeInterval{1, 10'000, 20'000});
  CHECK(plan.total_duration_ms == 20'000);
}

TEST_CASE("narration picks arrive in source order even when replied out of order") {
  const auto video = make_sequence({4});
  ScriptedLlmProvider llm;
  llm.push_records(json::array({{{"episode", 1}, {"scene_id", 3}},
                                {{"episode", 1}, {"scene_id", 1}},
                                {{"episode", 1}, {"scene_id", 3}}}));
  const auto plan = end2end_edit(video, {}, test_rules(), llm, ctx, End2EndMode::Narration);
  REQUIRE(plan.cuts.size() == 2);  // the duplicate pick collapses
  CHECK(plan.cuts[0] == TimeInterval{1, 0, 10'000});
  CHECK(plan.cuts[1] == TimeInterval{1, 20'000, 30'000});
}

TEST_CASE("narration picks of unknown scenes are discarded, all-unknown fails") {
  const auto video = make_sequence({2});
  ScriptedLlmProvider llm;
  llm.push_records(json::array({{{"episode", 1}, {"scene_id", 1}},
                                {{"episode", 9}, {"scene_id", 1}}}));
  const auto plan = end2end_edit(video, {}, test_rules(), llm, ctx, End2EndMode::Narration);
  CHECK(plan.cuts.size() == 1);

  ScriptedLlmProvider llm2;
  llm2.push_records(json::array({{{"episode", 9}, {"scene_id", 1}}}));
  CHECK_THROWS_AS(end2end_edit(video, {}, test_rules(), llm2, ctx, End2EndMode::Narration),
                  ValidationError);
}

TEST_CASE("ASR-mode spans convert from seconds and keep their durations") {
  const auto video = make_sequence({13}, 10'000);  // episode 1 spans 130 s
  const auto transcript = transcript_for(video);
  ScriptedLlmProvider llm;
  llm.push_records(json::array({
      {{"episode", 1}, {"start_time", 0}, {"end_time", 14}, {"thought", "setup"}},
      {{"episode", 1}, {"start_time", 18}, {"end_time", 125}, {"thought", "the arc"}},
  }));
  const auto plan = end2end_edit(video, transcript, test_rules(), llm, ctx, End2EndMode::Asr);
  CHECK(plan.provenance.kind == "end2end_asr");
  REQUIRE(plan.cuts.size() == 2);
  CHECK(plan.cuts[0] == TimeInterval{1, 0, 14'000});
  CHECK(plan.cuts[1] == TimeInterval{1, 18'000, 125'000});
  CHECK(plan.cuts[0].duration_ms() == 14'000);   // a 14 s cold open
  CHECK(plan.cuts[1].duration_ms() == 107'000);  // a 107 s main arc
  CHECK(plan.total_duration_ms == 121'000);
}

TEST_CASE("a span ending at or before its start violates the reply schema") {
  const auto video = make_sequence({3});
  const auto transcript = transcript_for(video);
  ScriptedLlmProvider llm;
  for (int i = 0; i < 3; ++i) {
    llm.push_records(json::array({{{"episode", 1}, {"start_time", 9}, {"end_time", 9}}}));
  }
  try {
    end2end_edit(video, transcript, test_rules(), llm, ctx, End2EndMode::Asr);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::SchemaViolation);
    CHECK(e.record_index() == std::size_t{0});
  }
}

TEST_CASE("spans clamp to the episode extent and overlaps merge with a warning") {
  const auto video = make_sequence({3});  // episode 1 ends at 30 s
  const auto transcript = transcript_for(video);
  ScriptedLlmProvider llm;
  llm.push_records(json::array({
      {{"episode", 1}, {"start_time", 25}, {"end_time", 99}},   // clamps to 30 s
      {{"episode", 1}, {"start_time", 27}, {"end_time", 29}},   // swallowed by the first
      {{"episode", 7}, {"start_time", 0}, {"end_time", 5}},     // unknown episode
      {{"episode", 1}, {"start_time", 31}, {"end_time", 40}},   // empty after clamping
  }));
  const auto plan = end2end_edit(video, transcript, test_rules(), llm, ctx, End2EndMode::Asr);
  REQUIRE(plan.cuts.size() == 1);
  CHECK(plan.cuts[0] == TimeInterval{1, 25'000, 30'000});
}

TEST_CASE("an unusable ASR reply or an empty transcript is an error") {
  const auto video = make_sequence({2});
  ScriptedLlmProvider llm;
  CHECK_THROWS_AS(end2end_edit(video, {}, test_rules(), llm, ctx, End2EndMode::Asr),
                  ValidationError);

  ScriptedLlmProvider llm2;
  llm2.push_records(json::array({{{"episode", 9}, {"start_time", 0}, {"end_time", 5}}}));
  CHECK_THROWS_AS(
      end2end_edit(video, transcript_for(video), test_rules(), llm2, ctx, End2EndMode::Asr),
      ValidationError);
}

TEST_CASE("the ASR prompt renders the transcript with second-resolution times") {
  const auto video = make_sequence({2});
  const auto transcript = transcript_for(video);
  ScriptedLlmProvider llm;
  llm.push_records(json::array({{{"episode", 1}, {"start_time", 0}, {"end_time", 5}}}));
  end2end_edit(video, transcript, test_rules(), llm, ctx, End2EndMode::Asr);
  const auto& prompt = llm.requests.at(0).messages.back().content;
  CHECK(prompt.find("\"start_time\":10.0") != std::string::npos);
  CHECK(prompt.find("love at first sight") != std::string::npos);
}
