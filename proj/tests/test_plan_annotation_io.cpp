#include <doctest.h>

#include <string>

#include <json.hpp>

#include "hive/core/errors.hpp"
#include "hive/io/annotations.hpp"
#include "hive/io/fs.hpp"
#include "hive/io/plan_io.hpp"
#include "hive/metrics/metrics.hpp"
#include "support/temp_dir.hpp"

using namespace hive;
using namespace hive::io;
using hive::testing::TempDir;
using nlohmann::json;

namespace {

EditPlan sample_plan(std::string id = "plan_0001") {
  EditPlan plan;
  plan.plan_id = std::move(id);
  plan.cuts = {{1, 30'000, 60'000}, {2, 0, 10'000}};
  plan.total_duration_ms = 40'000;
  plan.provenance.kind = "highlight";
  plan.provenance.clip_first_index = 4;
  plan.provenance.clip_last_index = 6;
  plan.provenance.opening_index = 3;
  plan.provenance.ending_index = 9;
  plan.provenance.pruned_indices = {7, 8};
  return plan;
}

metrics::AnnotationLog sample_log(std::string viewer, std::string plan) {
  metrics::AnnotationLog log;
  log.viewer_id = std::move(viewer);
  log.plan_id = std::move(plan);
  log.total_duration_ms = 68'400;
  log.normal_play_ms = 63'612;
  log.interruption_count = 9;
  log.hooked = true;
  log.suspense_felt = false;
  return log;
}

}  // namespace

TEST_CASE("plans round-trip through disk unchanged") {
  TempDir dir;
  const auto plan = sample_plan();
  save_plan(plan, dir.file("plan_0001.json"));
  const auto loaded = load_plan(dir.file("plan_0001.json"));
  CHECK(loaded == plan);
}

TEST_CASE("identical plans serialize byte-for-byte identically") {
  TempDir dir;
  save_plan(sample_plan(), dir.file("a.json"));
  save_plan(sample_plan(), dir.file("b.json"));
  const auto a = read_file(dir.file("a.json"));
  CHECK(a == read_file(dir.file("b.json")));
  CHECK(a.back() == '\n');
  // Keys are emitted in sorted order, so a reload-save cycle is stable too.
  save_plan(load_plan(dir.file("a.json")), dir.file("c.json"));
  CHECK(a == read_file(dir.file("c.json")));
}

TEST_CASE("saving rejects structurally broken plans") {
  TempDir dir;
  auto no_cuts = sample_plan();
  no_cuts.cuts.clear();
  no_cuts.total_duration_ms = 0;
  CHECK_THROWS_AS(save_plan(no_cuts, dir.file("x.json")), ValidationError);

  auto no_id = sample_plan();
  no_id.plan_id.clear();
  CHECK_THROWS_AS(save_plan(no_id, dir.file("x.json")), ValidationError);

  auto bad_total = sample_plan();
  bad_total.total_duration_ms = 1;
  CHECK_THROWS_AS(save_plan(bad_total, dir.file("x.json")), ValidationError);

  auto overlapping = sample_plan();
  overlapping.cuts = {{1, 0, 10'000}, {1, 5'000, 15'000}};
  overlapping.total_duration_ms = 20'000;
  CHECK_THROWS_AS(save_plan(overlapping, dir.file("x.json")), ValidationError);

  auto unordered = sample_plan();
  unordered.cuts = {{2, 0, 10'000}, {1, 0, 10'000}};
  unordered.total_duration_ms = 20'000;
  CHECK_THROWS_AS(save_plan(unordered, dir.file("x.json")), ValidationError);
}

TEST_CASE("loading rejects malformed or inconsistent plan files") {
  TempDir dir;
  write_file_atomic(dir.file("bad.json"), "{oops");
  CHECK_THROWS_AS(load_plan(dir.file("bad.json")), ParseError);

  write_file_atomic(dir.file("shape.json"), R"({"plan_id": "p"})" "\n");
  CHECK_THROWS_AS(load_plan(dir.file("shape.json")), ValidationError);

  json doc{{"format_version", 1},
           {"plan_id", "p"},
           {"total_duration_ms", 5},
           {"cuts", json::array({{{"episode_id", 1}, {"start_ms", 0}, {"end_ms", 1000}}})}};
  write_file_atomic(dir.file("total.json"), doc.dump());
  CHECK_THROWS_AS(load_plan(dir.file("total.json")), ValidationError);

  doc["total_duration_ms"] = 1000;
  doc["cuts"][0].erase("end_ms");
  write_file_atomic(dir.file("cut.json"), doc.dump());
  CHECK_THROWS_AS(load_plan(dir.file("cut.json")), ValidationError);

  CHECK_THROWS_AS(load_plan(dir.file("missing.json")), ConfigError);
}

TEST_CASE("a plan directory loads in filename order, ignoring other files") {
  TempDir dir;
  save_plan(sample_plan("plan_0010"), dir.file("plan_0010.json"));
  save_plan(sample_plan("plan_0002"), dir.file("plan_0002.json"));
  save_plan(sample_plan("plan_0001"), dir.file("plan_0001.json"));
  write_file_atomic(dir.file("README.txt"), "not a plan\n");
  write_file_atomic(dir.file("notes.json"), "{}\n");

  const auto plans = load_plans_from_dir(dir.path);
  REQUIRE(plans.size() == 3);
  CHECK(plans[0].plan_id == "plan_0001");
  CHECK(plans[1].plan_id == "plan_0002");
  CHECK(plans[2].plan_id == "plan_0010");

  CHECK_THROWS_AS(load_plans_from_dir(dir.file("not_here")), ConfigError);
}

TEST_CASE("annotation logs round-trip through JSON lines") {
  TempDir dir;
  std::vector<metrics::AnnotationLog> logs = {sample_log("v1", "plan_0001"),
                                              sample_log("v2", "plan_0001")};
  logs[1].hooked = false;
  logs[1].suspense_felt = true;
  logs[1].interruption_count = 0;
  logs[1].normal_play_ms = 68'400;

  save_annotation_logs(logs, dir.file("logs.jsonl"));
  const auto loaded = load_annotation_logs(dir.file("logs.jsonl"));
  REQUIRE(loaded.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(loaded[i].viewer_id == logs[i].viewer_id);
    CHECK(loaded[i].plan_id == logs[i].plan_id);
    CHECK(loaded[i].total_duration_ms == logs[i].total_duration_ms);
    CHECK(loaded[i].normal_play_ms == logs[i].normal_play_ms);
    CHECK(loaded[i].interruption_count == logs[i].interruption_count);
    CHECK(loaded[i].hooked == logs[i].hooked);
    CHECK(loaded[i].suspense_felt == logs[i].suspense_felt);
  }
}

TEST_CASE("metric reports recompute identically from reloaded logs") {
  TempDir dir;
  EditPlan plan;
  plan.plan_id = "plan_0001";
  plan.cuts = {{1, 0, 68'400}};
  plan.total_duration_ms = 68'400;

  std::vector<metrics::AnnotationLog> logs;
  for (int i = 0; i < 7; ++i) {
    auto log = sample_log("v" + std::to_string(i), "plan_0001");
    log.interruption_count = i;
    log.hooked = i % 2 == 0;
    logs.push_back(log);
  }
  save_annotation_logs(logs, dir.file("logs.jsonl"));
  const auto reloaded = load_annotation_logs(dir.file("logs.jsonl"));

  const auto before = metrics::build_report({plan}, logs);
  const auto after = metrics::build_report({plan}, reloaded);
  CHECK(*before.engagement == *after.engagement);
  CHECK(*before.smoothness_s == *after.smoothness_s);
  CHECK(*before.vei == *after.vei);
  CHECK(*before.hook_rate == *after.hook_rate);
  CHECK(*before.suspense_rate == *after.suspense_rate);
}

TEST_CASE("blank lines are skipped; broken lines carry their line number") {
  const std::string text =
      R"({"viewer_id":"v1","plan_id":"p","total_duration_ms":1000,"normal_play_ms":500,)"
      R"("interruption_count":0,"hooked":true,"suspense_felt":false})"
      "\n\n   \n"
      R"({"viewer_id":"v2","plan_id":"p","total_duration_ms":1000,"normal_play_ms":1000,)"
      R"("interruption_count":2,"hooked":false,"suspense_felt":true})"
      "\n";
  const auto logs = annotation_logs_from_text(text, "inline");
  REQUIRE(logs.size() == 2);
  CHECK(logs[1].viewer_id == "v2");

  try {
    annotation_logs_from_text("{}\n{broken\n", "inline");
    FAIL("expected a parse error");
  } catch (const ValidationError& e) {
    // The first line is valid JSON but fails the schema.
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  try {
    const std::string good_then_bad = text + "{broken\n";
    annotation_logs_from_text(good_then_bad, "inline");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("annotation schema violations are rejected on load") {
  auto line = [](const json& doc) { return doc.dump() + "\n"; };
  json good{{"viewer_id", "v"},         {"plan_id", "p"},   {"total_duration_ms", 1000},
            {"normal_play_ms", 500},    {"hooked", true},   {"interruption_count", 0},
            {"suspense_felt", false}};
  CHECK(annotation_logs_from_text(line(good), "inline").size() == 1);

  auto missing = good;
  missing.erase("hooked");
  CHECK_THROWS_AS(annotation_logs_from_text(line(missing), "inline"), ValidationError);

  auto wrong_type = good;
  wrong_type["interruption_count"] = "none";
  CHECK_THROWS_AS(annotation_logs_from_text(line(wrong_type), "inline"), ValidationError);

  auto overplayed = good;
  overplayed["normal_play_ms"] = 2000;
  CHECK_THROWS_AS(annotation_logs_from_text(line(overplayed), "inline"), ValidationError);

  auto zero_duration = good;
  zero_duration["total_duration_ms"] = 0;
  CHECK_THROWS_AS(annotation_logs_from_text(line(zero_duration), "inline"), ValidationError);

  auto negative_interruptions = good;
  negative_interruptions["interruption_count"] = -1;
  CHECK_THROWS_AS(annotation_logs_from_text(line(negative_interruptions), "inline"),
                  ValidationError);
}
