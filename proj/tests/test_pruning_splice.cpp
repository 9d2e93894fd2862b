#include <random>

#include <doctest.h>
#include <json.hpp>

#include "hive/core/errors.hpp"
#include "hive/editing/highlight.hpp"
#include "hive/editing/pruning.hpp"
#include "support/oracles.hpp"
#include "support/scripted_llm.hpp"

using namespace hive;
using namespace hive::editing;
using hive::testing::make_scored;
using hive::testing::ScriptedLlmProvider;
using nlohmann::json;

namespace {

const PromptContext ctx{"Test Drama", "male", "mock"};

json verdict(EpisodeId episode, int scene, bool del) {
  return {{"episode", episode}, {"scene_id", scene}, {"thought", "t"}, {"delete", del}};
}

// The worked-example sequence with window scenes 4..10 around clip 4-6.
struct Windowed {
  SceneSequence scored = make_scored({7, 3}, {0, 0, 0, 3, 4, 2, 0, 2, 1, 0});
  EditWindow window{{4, 6, 9}, 4, 10};
};

}  // namespace

TEST_CASE("a delete-nothing reply keeps the whole window") {
  Windowed w;
  ScriptedLlmProvider llm;
  llm.push_records(json::array());
  CHECK(prune_window(w.window, w.scored, llm, ctx) == std::vector<int>{4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("a general scene inside the window can be deleted") {
  Windowed w;
  ScriptedLlmProvider llm;
  llm.push_records(json::array({verdict(1, 7, true)}));
  CHECK(prune_window(w.window, w.scored, llm, ctx) == std::vector<int>{4, 5, 6, 8, 9, 10});
}

TEST_CASE("highlight scenes and window boundaries survive any reply") {
  Windowed w;
  ScriptedLlmProvider llm;
  llm.push_records(json::array({
      verdict(1, 5, true),  // highlight
      verdict(1, 4, true),  // window opening (also highlight here)
      verdict(2, 3, true),  // window ending
      verdict(2, 1, true),  // highlight inside window
  }));
  CHECK(prune_window(w.window, w.scored, llm, ctx) == std::vector<int>{4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("prune decisions outside the window or for unknown scenes are ignored") {
  Windowed w;
  w.window = {{4, 6, 9}, 4, 7};
  ScriptedLlmProvider llm;
  llm.push_records(json::array({
      verdict(1, 2, true),  // before the window
      verdict(2, 2, true),  // after the window
      verdict(5, 1, true),  // unknown
      verdict(1, 7, false),
  }));
  CHECK(prune_window(w.window, w.scored, llm, ctx) == std::vector<int>{4, 5, 6, 7});
}

TEST_CASE("the pruning roster labels scenes as highlight or general") {
  Windowed w;
  ScriptedLlmProvider llm;
  llm.push_records(json::array());
  prune_window(w.window, w.scored, llm, ctx);
  const auto& prompt = llm.requests.at(0).messages.back().content;
  CHECK(prompt.find("[Episode 1 | Scene 5] <Highlight Scene>") != std::string::npos);
  CHECK(prompt.find("[Episode 1 | Scene 7] <General Scene>") != std::string::npos);
  // scenes outside the window are not offered at all
  CHECK(prompt.find("[Episode 1 | Scene 3]") == std::string::npos);
}

TEST_CASE("a window outside the roster is rejected") {
  Windowed w;
  ScriptedLlmProvider llm;
  CHECK_THROWS_AS(prune_window({{4, 6, 9}, 0, 5}, w.scored, llm, ctx), ValidationError);
  CHECK_THROWS_AS(prune_window({{4, 6, 9}, 4, 11}, w.scored, llm, ctx), ValidationError);
  CHECK_THROWS_AS(prune_window({{4, 6, 9}, 6, 4}, w.scored, llm, ctx), ValidationError);
}

TEST_CASE("contiguous kept scenes splice into a single cut") {
  Windowed w;
  const auto plan = splice({4, 5, 6}, w.scored);
  REQUIRE(plan.cuts.size() == 1);
  CHECK(plan.cuts[0] == TimeInterval{1, 30'000, 60'000});
  CHECK(plan.total_duration_ms == 30'000);
}

TEST_CASE("a gap splits the splice into two cuts") {
  Windowed w;
  const auto plan = splice({4, 5, 7}, w.scored);
  REQUIRE(plan.cuts.size() == 2);
  CHECK(plan.cuts[0] == TimeInterval{1, 30'000, 50'000});
  CHECK(plan.cuts[1] == TimeInterval{1, 60'000, 70'000});
  CHECK(plan.total_duration_ms == 30'000);
}

TEST_CASE("adjacent global indices across episodes stay separate cuts") {
  Windowed w;
  const auto plan = splice({7, 8}, w.scored);
  REQUIRE(plan.cuts.size() == 2);
  CHECK(plan.cuts[0].episode_id == 1);
  CHECK(plan.cuts[1].episode_id == 2);
}

TEST_CASE("splice validates the kept set") {
  Windowed w;
  CHECK_THROWS_AS(splice({}, w.scored), ValidationError);
  CHECK_THROWS_AS(splice({3, 3}, w.scored), ValidationError);
  CHECK_THROWS_AS(splice({5, 4}, w.scored), ValidationError);
  CHECK_THROWS_AS(splice({11}, w.scored), ValidationError);
}

TEST_CASE("the window fills provenance and the pruned set is the complement") {
  Windowed w;
  const auto plan = splice({4, 5, 6, 8, 10}, w.scored, &w.window);
  CHECK(plan.provenance.kind == "highlight");
  CHECK(plan.provenance.clip_first_index == 4);
  CHECK(plan.provenance.clip_last_index == 6);
  CHECK(plan.provenance.opening_index == 4);
  CHECK(plan.provenance.ending_index == 10);
  CHECK(plan.provenance.pruned_indices == std::vector<int>{7, 9});
}

TEST_CASE("random kept sets produce one cut per contiguous run") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> coin(0, 1);
  Windowed w;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> kept;
    for (int g = 1; g <= w.scored.size(); ++g) {
      if (coin(rng)) kept.push_back(g);
    }
    if (kept.empty()) continue;
    const auto plan = splice(kept, w.scored);
    const auto expected = hive::testing::oracle_splice_cuts(kept, w.scored);
    CHECK(plan.cuts == expected);
    std::int64_t total = 0;
    for (const auto& cut : expected) total += cut.duration_ms();
    CHECK(plan.total_duration_ms == total);
  }
}
