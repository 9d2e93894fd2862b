#include <set>

#include <doctest.h>
#include <json.hpp>

#include "hive/core/errors.hpp"
#include "hive/editing/editor.hpp"
#include "hive/providers/mock.hpp"
#include "support/oracles.hpp"
#include "support/scripted_llm.hpp"

using namespace hive;
using namespace hive::editing;
using hive::testing::make_sequence;
using nlohmann::json;

namespace {

const PromptContext ctx{"Test Drama", "male", "mock"};

HighlightRuleSet test_rules() {
  HighlightRuleSet rules;
  rules.audience = Audience::Male;
  rules.rules = {{"the counterattack", 3}};
  return rules;
}

// Worked-example scores: scenes 4-6 of episode 1 score 3/4/2, the first two
// scenes of episode 2 score 2/1, everything else 0.
json worked_example_scores() {
  return json::array({
      {{"episode", 1}, {"scene_id", 4}, {"score", 3}},
      {{"episode", 1}, {"scene_id", 5}, {"score", 4}},
      {{"episode", 1}, {"scene_id", 6}, {"score", 2}},
      {{"episode", 2}, {"scene_id", 1}, {"score", 2}},
      {{"episode", 2}, {"scene_id", 2}, {"score", 1}},
  });
}

providers::MockLlmProvider worked_example_mock() {
  json behaviors = {
      {"highlight_scoring", {{"mode", "scores"}, {"scores", worked_example_scores()}}},
      {"boundary_selection", {{"mode", "accept_all"}}},
      {"pruning", {{"mode", "keep"}}},
  };
  return providers::MockLlmProvider{json{{"behaviors", behaviors}}};
}

}  // namespace

TEST_CASE("the worked example with one expanded clip yields sixteen plans") {
  const auto video = make_sequence({7, 3});
  auto llm = worked_example_mock();
  EditOptions options;
  options.top_k = 1;

  const auto outcome = edit(video, test_rules(), llm, ctx, options);
  REQUIRE(outcome.clips.size() == 2);
  CHECK(outcome.clips[0] == HighlightClip{4, 6, 9});
  CHECK(outcome.clips[1] == HighlightClip{8, 9, 3});

  REQUIRE(outcome.plans.size() == 16);
  CHECK(outcome.plans.front().plan_id == "plan_0001");
  CHECK(outcome.plans.back().plan_id == "plan_0016");

  // the plan ids follow clip-major window order: openings {1,2,3,4} x endings {6,7,9,10}
  std::set<std::pair<int, int>> pairs;
  for (const auto& plan : outcome.plans) {
    CHECK(plan.provenance.clip_first_index == 4);
    CHECK(plan.provenance.clip_last_index == 6);
    pairs.insert({plan.provenance.opening_index, plan.provenance.ending_index});
  }
  CHECK(pairs.size() == 16);
  for (int o : {1, 2, 3, 4}) {
    for (int e : {6, 7, 9, 10}) {
      CHECK(pairs.count({o, e}) == 1);
    }
  }

  // the tightest window is exactly the clip span
  const auto& tight = outcome.plans[12];  // (4, 6) after (1,*), (2,*), (3,*)
  CHECK(tight.provenance.opening_index == 4);
  CHECK(tight.provenance.ending_index == 6);
  REQUIRE(tight.cuts.size() == 1);
  CHECK(tight.cuts[0] == TimeInterval{1, 30'000, 60'000});
  CHECK(tight.total_duration_ms == 30'000);

  // every plan keeps the full highlight span on the source timeline
  for (const auto& plan : outcome.plans) {
    bool covered = false;
    for (const auto& cut : plan.cuts) {
      covered |= cut.episode_id == 1 && cut.start_ms <= 30'000 && cut.end_ms >= 60'000;
    }
    CHECK(covered);
  }
}

TEST_CASE("expanding both clips dedups shared windows down to twenty plans") {
  const auto video = make_sequence({7, 3});
  auto llm = worked_example_mock();
  EditOptions options;
  options.top_k = 2;
  const auto outcome = edit(video, test_rules(), llm, ctx, options);
  CHECK(outcome.plans.size() == 20);

  // the four pairs unique to the second clip belong to it
  int second_clip_plans = 0;
  for (const auto& plan : outcome.plans) {
    if (plan.provenance.clip_first_index == 8) {
      ++second_clip_plans;
      CHECK(plan.provenance.opening_index >= 7);
    }
  }
  CHECK(second_clip_plans == 4);
}

TEST_CASE("an oversized top-k clamps to the clip count") {
  const auto video = make_sequence({7, 3});
  auto a = worked_example_mock();
  auto b = worked_example_mock();
  EditOptions two;
  two.top_k = 2;
  EditOptions many;
  many.top_k = 99;
  CHECK(edit(video, test_rules(), a, ctx, two).plans.size() ==
        edit(video, test_rules(), b, ctx, many).plans.size());
}

TEST_CASE("an all-zero scoring reply aborts with an empty-highlights error") {
  const auto video = make_sequence({5});
  json behaviors = {{"highlight_scoring", {{"mode", "scores"}, {"scores", json::array()}}}};
  providers::MockLlmProvider llm{json{{"behaviors", behaviors}}};
  CHECK_THROWS_AS(edit(video, test_rules(), llm, ctx, {}), EmptyHighlightsError);
}

TEST_CASE("rejecting every boundary for every top clip leaves no windows") {
  const auto video = make_sequence({7, 3});
  json behaviors = {
      {"highlight_scoring", {{"mode", "scores"}, {"scores", worked_example_scores()}}},
      {"boundary_selection", {{"mode", "reject_all"}}},
  };
  providers::MockLlmProvider llm{json{{"behaviors", behaviors}}};
  EditOptions options;
  options.top_k = 2;
  CHECK_THROWS_AS(edit(video, test_rules(), llm, ctx, options), NoWindowsError);
}

TEST_CASE("pruning inside the editor can drop general scenes but never highlights") {
  const auto video = make_sequence({7, 3});
  json behaviors = {
      {"highlight_scoring", {{"mode", "scores"}, {"scores", worked_example_scores()}}},
      {"boundary_selection", {{"mode", "accept_all"}}},
      {"pruning",
       {{"mode", "delete"},
        {"scenes", json::array({
                       {{"episode", 1}, {"scene_id", 7}},  // general, prunable
                       {{"episode", 1}, {"scene_id", 5}},  // highlight, protected
                   })}}},
  };
  providers::MockLlmProvider llm{json{{"behaviors", behaviors}}};
  EditOptions options;
  options.top_k = 1;
  const auto outcome = edit(video, test_rules(), llm, ctx, options);
  for (const auto& plan : outcome.plans) {
    // scene 5 ([40000, 50000) of episode 1) is always covered
    bool five_covered = false;
    bool seven_covered = false;
    for (const auto& cut : plan.cuts) {
      if (cut.episode_id != 1) continue;
      five_covered |= cut.start_ms <= 40'000 && cut.end_ms >= 50'000;
      seven_covered |= cut.start_ms <= 60'000 && cut.end_ms >= 70'000;
    }
    CHECK(five_covered);
    // scene 7 only survives where it is the window's ending scene
    const bool seven_is_boundary = plan.provenance.ending_index == 7;
    CHECK(seven_covered == seven_is_boundary);
  }
}

TEST_CASE("disabling boundary selection accepts every candidate without an LLM call") {
  const auto video = make_sequence({7, 3});
  // no boundary behavior: a boundary call would fail the mock lookup
  json behaviors = {
      {"highlight_scoring", {{"mode", "scores"}, {"scores", worked_example_scores()}}},
      {"pruning", {{"mode", "keep"}}},
  };
  providers::MockLlmProvider llm{json{{"behaviors", behaviors}}};
  EditOptions options;
  options.top_k = 1;
  options.boundary_selection = false;
  const auto outcome = edit(video, test_rules(), llm, ctx, options);
  CHECK(outcome.plans.size() == 16);
}

TEST_CASE("disabling pruning splices every window whole") {
  const auto video = make_sequence({7, 3});
  json behaviors = {
      {"highlight_scoring", {{"mode", "scores"}, {"scores", worked_example_scores()}}},
      {"boundary_selection", {{"mode", "accept_all"}}},
  };
  providers::MockLlmProvider llm{json{{"behaviors", behaviors}}};
  EditOptions options;
  options.top_k = 1;
  options.pruning = false;
  const auto outcome = edit(video, test_rules(), llm, ctx, options);
  for (const auto& plan : outcome.plans) {
    CHECK(plan.provenance.pruned_indices.empty());
  }
}

TEST_CASE("without highlight detection every ordered scene pair becomes a window") {
  const auto video = make_sequence({3});
  providers::MockLlmProvider llm{json{{"behaviors", {{"pruning", {{"mode", "keep"}}}}}}};
  EditOptions options;
  options.highlight_detection = false;
  options.boundary_selection = false;
  const auto outcome = edit(video, test_rules(), llm, ctx, options);
  CHECK(outcome.plans.size() == 6);  // (1,1) (1,2) (1,3) (2,2) (2,3) (3,3)
  CHECK(outcome.clips.empty());
  for (const auto& plan : outcome.plans) {
    CHECK(plan.provenance.clip_first_index == 0);
  }
}

TEST_CASE("two identical runs produce identical plans") {
  const auto video = make_sequence({7, 3});
  auto a = worked_example_mock();
  auto b = worked_example_mock();
  EditOptions options;
  options.top_k = 2;
  const auto first = edit(video, test_rules(), a, ctx, options);
  const auto second = edit(video, test_rules(), b, ctx, options);
  REQUIRE(first.plans.size() == second.plans.size());
  for (std::size_t i = 0; i < first.plans.size(); ++i) {
    CHECK(first.plans[i] == second.plans[i]);
  }
}

TEST_CASE("editing rejects unnarrated or empty rosters") {
  providers::MockLlmProvider llm{json::object()};
  CHECK_THROWS_AS(edit(SceneSequence{}, test_rules(), llm, ctx, {}), ValidationError);

  Scene bare;
  bare.episode_id = 1;
  bare.scene_id = 1;
  bare.interval = {1, 0, 1'000};
  CHECK_THROWS_AS(edit(SceneSequence{{bare}}, test_rules(), llm, ctx, {}), ValidationError);
}
