#include <doctest.h>

#include "hive/core/errors.hpp"
#include "hive/core/types.hpp"
#include "support/oracles.hpp"

using namespace hive;
using hive::testing::make_sequence;

TEST_CASE("global order is lexicographic in (episode, scene) with dense 1-based indices") {
  const auto seq = make_sequence({7, 3});
  REQUIRE(seq.size() == 10);
  CHECK(seq.at(1).episode_id == 1);
  CHECK(seq.at(7).scene_id == 7);
  CHECK(seq.at(8).episode_id == 2);
  CHECK(seq.at(8).scene_id == 1);
  CHECK(seq.find(2, 3) == 10);
  CHECK(seq.find(3, 1) == std::nullopt);
}

TEST_CASE("construction sorts scenes given out of order") {
  std::vector<Scene> scrambled;
  for (int idx : {2, 1, 3}) {
    Scene s;
    s.episode_id = 1;
    s.scene_id = idx;
    s.interval = {1, (idx - 1) * 1000, idx * 1000};
    s.narration = "n";
    scrambled.push_back(s);
  }
  SceneSequence seq(scrambled);
  CHECK(seq.at(1).scene_id == 1);
  CHECK(seq.at(3).scene_id == 3);
}

TEST_CASE("at rejects out-of-range global indices") {
  const auto seq = make_sequence({2});
  CHECK_THROWS_AS(seq.at(0), ValidationError);
  CHECK_THROWS_AS(seq.at(3), ValidationError);
}

TEST_CASE("scene ids must be dense and contiguous within an episode") {
  std::vector<Scene> gap;
  for (int idx : {1, 3}) {
    Scene s;
    s.episode_id = 1;
    s.scene_id = idx;
    s.interval = {1, (idx - 1) * 1000, idx * 1000};
    gap.push_back(s);
  }
  CHECK_THROWS_AS(SceneSequence{gap}, ValidationError);

  std::vector<Scene> hole;
  for (int idx : {1, 2}) {
    Scene s;
    s.episode_id = 1;
    s.scene_id = idx;
    s.interval = {1, (idx - 1) * 1000 + (idx == 2 ? 500 : 0), idx * 1000};
    hole.push_back(s);
  }
  CHECK_THROWS_AS(SceneSequence{hole}, ValidationError);
}

TEST_CASE("an episode must start at scene 1") {
  Scene s;
  s.episode_id = 2;
  s.scene_id = 2;
  s.interval = {2, 0, 1000};
  CHECK_THROWS_AS(SceneSequence({s}), ValidationError);
}

TEST_CASE("with_scores installs scores and derives roles") {
  const auto seq = make_sequence({3});
  const auto scored = seq.with_scores({0, 2, 0});
  CHECK(scored.at(1).role == SceneRole::General);
  CHECK(scored.at(2).role == SceneRole::Highlight);
  CHECK(scored.at(2).score == 2);
  CHECK(scored.at(3).role == SceneRole::General);

  CHECK_THROWS_AS(seq.with_scores({1, 2}), ValidationError);
  CHECK_THROWS_AS(seq.with_scores({-1, 0, 0}), ValidationError);
}

TEST_CASE("roles must agree with scores at construction") {
  Scene s;
  s.episode_id = 1;
  s.scene_id = 1;
  s.interval = {1, 0, 1000};
  s.score = 3;
  s.role = SceneRole::General;
  CHECK_THROWS_AS(SceneSequence({s}), ValidationError);
}
