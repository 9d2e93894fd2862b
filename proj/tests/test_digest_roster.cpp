#include <doctest.h>

#include "hive/providers/digest.hpp"
#include "hive/providers/roster_format.hpp"

using namespace hive;
using namespace hive::providers;

TEST_CASE("fnv1a matches published 64-bit reference vectors") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("request digest covers wire fields and ignores the task tag") {
  LlmRequest a;
  a.task = "highlight_scoring";
  a.model = "m";
  a.messages = {{"system", "sys"}, {"user", "hello"}};

  LlmRequest b = a;
  b.task = "pruning";
  CHECK(request_digest(a) == request_digest(b));

  LlmRequest c = a;
  c.messages[1].content = "hello!";
  CHECK(request_digest(a) != request_digest(c));

  LlmRequest d = a;
  d.model = "m2";
  CHECK(request_digest(a) != request_digest(d));

  LlmRequest e = a;
  e.temperature = 0.5;
  CHECK(request_digest(a) != request_digest(e));
}

TEST_CASE("roster line renders ids, tags and narration") {
  Scene s;
  s.episode_id = 2;
  s.scene_id = 3;
  s.interval = {2, 0, 1000};
  s.narration = "A argues with B.";
  s.score = 4;
  s.role = SceneRole::Highlight;
  s.tags = {SceneTag::OptionalStart};

  CHECK(render_roster_line(s) == "[Episode 2 | Scene 3] <Highlight> <Optional Start> A argues with B.");
  CHECK(render_roster_line(s, /*prune_labels=*/true) ==
        "[Episode 2 | Scene 3] <Highlight Scene> A argues with B.");

  Scene g = s;
  g.score = 0;
  g.role = SceneRole::General;
  g.tags = {SceneTag::OptionalEnd};
  CHECK(render_roster_line(g) == "[Episode 2 | Scene 3] <Optional End> A argues with B.");
  CHECK(render_roster_line(g, /*prune_labels=*/true) ==
        "[Episode 2 | Scene 3] <General Scene> A argues with B.");
}

TEST_CASE("roster lines survive a render and parse round trip") {
  Scene s;
  s.episode_id = 1;
  s.scene_id = 5;
  s.interval = {1, 0, 1000};
  s.narration = "The duel begins.";
  s.score = 1;
  s.role = SceneRole::Highlight;
  s.tags = {SceneTag::OptionalStart, SceneTag::OptionalEnd};

  const std::string prompt =
      "Some instruction text.\n" + render_roster_line(s) + "\nTrailing remark.\n";
  const auto lines = parse_roster_lines(prompt);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].episode_id == 1);
  CHECK(lines[0].scene_id == 5);
  CHECK(lines[0].highlight);
  CHECK(lines[0].optional_start);
  CHECK(lines[0].optional_end);
  CHECK(lines[0].narration == "The duel begins.");
}

TEST_CASE("parse recovers a multi-scene roster in order and skips prose") {
  const std::string prompt =
      "Rate each scene.\n"
      "[Episode 1 | Scene 1] Quiet breakfast.\n"
      "[Episode 1 | Scene 2] <Highlight> The slap.\n"
      "Respond inside <result> tags.\n";
  const auto lines = parse_roster_lines(prompt);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].scene_id == 1);
  CHECK_FALSE(lines[0].highlight);
  CHECK(lines[0].narration == "Quiet breakfast.");
  CHECK(lines[1].highlight);
  CHECK(lines[1].narration == "The slap.");
}
