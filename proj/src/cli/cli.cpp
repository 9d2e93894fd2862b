#include "hive/cli/cli.hpp"

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hive/cli/config.hpp"
#include "hive/core/errors.hpp"
#include "hive/core/log.hpp"
#include "hive/editing/end2end.hpp"
#include "hive/io/annotations.hpp"
#include "hive/io/cutlist.hpp"
#include "hive/io/fs.hpp"
#include "hive/io/ingest.hpp"
#include "hive/io/manifest.hpp"
#include "hive/io/plan_io.hpp"
#include "hive/metrics/metrics.hpp"

namespace hive::cli {

namespace {

using understanding::PromptContext;

struct CommonArgs {
  std::string config_path;
  std::string mock_fixtures;
  std::string seed_log;
  bool quiet = false;
};

RunConfig effective_config(const CommonArgs& common) {
  RunConfig config;
  if (!common.config_path.empty()) {
    config = load_run_config(common.config_path);
  }
  if (!common.mock_fixtures.empty()) {
    config.provider_mode = "mock";
    config.mock_fixtures = common.mock_fixtures;
  }
  if (!common.seed_log.empty()) {
    config.seed_log = common.seed_log;
  }
  config.understand_options.title = config.title;
  config.understand_options.audience = config.audience;
  config.understand_options.model = config.model;
  return config;
}

std::string shell_quote(const std::string& arg) {
  std::string out = "'";
  for (const char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

nlohmann::json profile_to_json(const CharacterProfile& profile) {
  nlohmann::json j;
  j["id"] = profile.id;
  if (profile.display_name) {
    j["display_name"] = *profile.display_name;
  }
  if (profile.face_cluster_id) {
    j["face_cluster_id"] = *profile.face_cluster_id;
  }
  j["descriptors"] = profile.descriptors;
  return j;
}

int cmd_understand(const CommonArgs& common, const std::string& job_path,
                   const std::string& out_path, const std::string& details_path) {
  RunConfig config = effective_config(common);
  const io::UnderstandJob job = io::load_understand_job(job_path);
  if (!job.title.empty()) {
    config.title = job.title;
    config.understand_options.title = job.title;
  }
  config.audience = job.audience;
  config.understand_options.audience = job.audience;

  auto llm = make_llm_provider(config);
  auto classifier = make_fusion_classifier(config);
  const auto result =
      understanding::run_understanding(job.episodes, *llm, *classifier,
                                       config.understand_options);

  io::SceneManifest manifest =
      io::manifest_from_scenes(config.title, config.audience, result.scenes);
  io::save_manifest(manifest, out_path);
  std::cout << "wrote manifest with " << result.scenes.size() << " scenes across "
            << manifest.episodes.size() << " episodes to " << out_path << "\n";

  if (!details_path.empty()) {
    nlohmann::json details;
    details["format_version"] = 1;
    details["characters"] = nlohmann::json::array();
    for (const auto& profile : result.characters) {
      details["characters"].push_back(profile_to_json(profile));
    }
    details["dialogue"] = nlohmann::json::array();
    for (const auto& line : result.dialogue) {
      details["dialogue"].push_back(
          {{"id", line.id},
           {"episode_id", line.interval.episode_id},
           {"start_ms", line.interval.start_ms},
           {"end_ms", line.interval.end_ms},
           {"speaker", line.speaker ? *line.speaker : ""},
           {"text", line.text},
           {"source", line.source == DialogueSource::Corrected ? "corrected" : "asr"}});
    }
    details["flagged_scenes"] = nlohmann::json::array();
    for (const auto& flag : result.flagged_scenes) {
      details["flagged_scenes"].push_back({{"episode_id", flag.episode_id},
                                           {"scene_id", flag.scene_id},
                                           {"reason", flag.reason}});
    }
    details["rejected_correction_lines"] = result.rejected_correction_lines;
    io::write_file_atomic(details_path, details.dump(2) + "\n");
    std::cout << "wrote understanding details to " << details_path << "\n";
  }
  return 0;
}

int cmd_edit(const CommonArgs& common, const std::string& manifest_path,
             const std::string& out_dir, const std::string& rules_path, int top_k,
             bool no_highlight, bool no_boundary, bool no_pruning, bool no_cross_episode) {
  RunConfig config = effective_config(common);
  if (!rules_path.empty()) {
    config.rules_path = rules_path;
  }
  if (top_k > 0) {
    config.edit_options.top_k = top_k;
  }
  config.edit_options.highlight_detection = !no_highlight;
  config.edit_options.boundary_selection = !no_boundary;
  config.edit_options.pruning = !no_pruning;
  if (no_cross_episode) {
    config.edit_options.allow_cross_episode_clips = false;
  }

  const io::SceneManifest manifest = io::load_manifest(manifest_path);
  const SceneSequence video = io::to_scene_sequence(manifest);
  const auto rules = resolve_rules(config, manifest.audience);

  const PromptContext ctx{manifest.title.empty() ? config.title : manifest.title,
                          editing::to_string(rules.audience), config.model};
  auto llm = make_llm_provider(config);
  const auto outcome = editing::edit(video, rules, *llm, ctx, config.edit_options);

  for (const auto& plan : outcome.plans) {
    io::save_plan(plan, std::filesystem::path(out_dir) / (plan.plan_id + ".json"));
  }
  std::cout << "wrote " << outcome.plans.size() << " plans to " << out_dir << "\n";
  for (const auto& plan : outcome.plans) {
    std::cout << "  " << plan.plan_id << ": " << plan.cuts.size() << " cuts, "
              << plan.total_duration_ms << " ms\n";
  }
  if (!outcome.defaulted_scene_indices.empty()) {
    std::cout << "note: " << outcome.defaulted_scene_indices.size()
              << " scenes received no score and defaulted to 0\n";
  }
  if (outcome.skipped_clips > 0) {
    std::cout << "note: " << outcome.skipped_clips
              << " clips were skipped for lacking accepted openings/endings\n";
  }
  return 0;
}

int cmd_baseline(const CommonArgs& common, const std::string& manifest_path,
                 const std::string& mode, const std::vector<std::string>& transcript_args,
                 const std::string& rules_path, const std::string& out_path) {
  RunConfig config = effective_config(common);
  if (!rules_path.empty()) {
    config.rules_path = rules_path;
  }
  const io::SceneManifest manifest = io::load_manifest(manifest_path);
  const SceneSequence video = io::to_scene_sequence(manifest);
  const auto rules = resolve_rules(config, manifest.audience);
  const PromptContext ctx{manifest.title.empty() ? config.title : manifest.title,
                          editing::to_string(rules.audience), config.model};

  editing::End2EndMode e2e_mode;
  if (mode == "narration") {
    e2e_mode = editing::End2EndMode::Narration;
  } else if (mode == "asr") {
    e2e_mode = editing::End2EndMode::Asr;
  } else {
    throw ConfigError("baseline --mode must be \"narration\" or \"asr\"");
  }

  std::vector<DialogueLine> transcript;
  if (e2e_mode == editing::End2EndMode::Asr) {
    if (transcript_args.empty()) {
      throw ConfigError("baseline --mode asr needs at least one --transcript");
    }
    for (const auto& arg : transcript_args) {
      // "<episode>:<path>" or a bare path (episode 1).
      EpisodeId episode_id = 1;
      std::string path = arg;
      const auto colon = arg.find(':');
      if (colon != std::string::npos && colon > 0 &&
          arg.substr(0, colon).find_first_not_of("0123456789") == std::string::npos) {
        episode_id = std::stoi(arg.substr(0, colon));
        path = arg.substr(colon + 1);
      }
      const std::string text = io::read_file(path);
      auto lines = std::filesystem::path(path).extension() == ".srt"
                       ? io::parse_srt(text, episode_id, path)
                       : io::parse_transcript_jsonl(text, episode_id, path);
      for (auto& line : lines) {
        transcript.push_back(std::move(line));
      }
    }
  }

  auto llm = make_llm_provider(config);
  const auto plan = editing::end2end_edit(video, transcript, rules, *llm, ctx, e2e_mode);
  io::save_plan(plan, out_path);
  std::cout << "wrote baseline plan (" << plan.cuts.size() << " cuts, " << plan.total_duration_ms
            << " ms) to " << out_path << "\n";
  return 0;
}

int cmd_metrics(const std::vector<std::string>& plan_paths, const std::string& plans_dir,
                const std::string& logs_path, const std::string& reference_path,
                const std::string& out_path) {
  std::vector<EditPlan> plans;
  if (!plans_dir.empty()) {
    plans = io::load_plans_from_dir(plans_dir);
  }
  for (const auto& path : plan_paths) {
    plans.push_back(io::load_plan(path));
  }
  if (plans.empty()) {
    throw ConfigError("metrics: no plans given (use --plans-dir or --plan)");
  }
  if (plans.size() == 1) {
    log::warn("only one plan given; diversity needs at least two and will be omitted");
  }

  std::vector<metrics::AnnotationLog> logs;
  if (!logs_path.empty()) {
    logs = io::load_annotation_logs(logs_path);
  }

  EditPlan reference;
  const EditPlan* reference_ptr = nullptr;
  if (!reference_path.empty()) {
    reference = io::load_plan(reference_path);
    reference_ptr = &reference;
  }

  const auto report = metrics::build_report(plans, logs, reference_ptr);
  std::cout << metrics::render_report_table(report);
  if (!out_path.empty()) {
    io::write_file_atomic(out_path, metrics::report_to_json(report).dump(2) + "\n");
    std::cout << "wrote report to " << out_path << "\n";
  }
  return 0;
}

int cmd_export(const std::string& plan_path, const std::string& sources_path,
               const std::string& out_dir, const std::string& stem) {
  const EditPlan plan = io::load_plan(plan_path);
  const auto sources = io::load_sources(sources_path);
  const auto result = io::export_cutlist(plan, sources, stem);

  const std::filesystem::path dir(out_dir);
  io::write_file_atomic(dir / (stem + ".edl"), result.edl_text);
  io::write_file_atomic(dir / (stem + "_concat.txt"), result.concat_manifest);

  std::ostringstream script;
  script << "#!/bin/sh\nset -e\n";
  for (const auto& command : result.commands) {
    for (std::size_t i = 0; i < command.size(); ++i) {
      script << (i ? " " : "") << shell_quote(command[i]);
    }
    script << "\n";
  }
  io::write_file_atomic(dir / (stem + "_commands.sh"), script.str());

  nlohmann::json cutlist;
  cutlist["format_version"] = 1;
  cutlist["plan_id"] = plan.plan_id;
  cutlist["total_trimmed_ms"] = result.total_trimmed_ms;
  cutlist["entries"] = nlohmann::json::array();
  for (const auto& entry : result.entries) {
    cutlist["entries"].push_back({{"source_path", entry.source_path},
                                  {"start_ms", entry.start_ms},
                                  {"end_ms", entry.end_ms}});
  }
  io::write_file_atomic(dir / (stem + "_cutlist.json"), cutlist.dump(2) + "\n");

  std::cout << result.edl_text;
  std::cout << "wrote export files to " << out_dir << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"LLM-driven short-drama editing pipeline"};
  app.require_subcommand(1);

  CommonArgs common;
  app.add_option("--config", common.config_path, "run configuration JSON");
  app.add_option("--mock-fixtures", common.mock_fixtures,
                 "fixture file driving the offline mock provider");
  app.add_option("--seed-log", common.seed_log, "append request/response digests to this JSONL");
  app.add_flag("--quiet", common.quiet, "suppress warnings on stderr");

  auto* understand = app.add_subcommand("understand", "episodes -> narrated scene manifest");
  std::string job_path, manifest_out, details_out;
  understand->add_option("--job", job_path, "episode inputs job JSON")->required();
  understand->add_option("--out", manifest_out, "manifest output path")->required();
  understand->add_option("--details-out", details_out, "characters/dialogue details output");

  auto* edit = app.add_subcommand("edit", "manifest -> candidate edit plans");
  std::string manifest_path, out_dir, rules_path;
  int top_k = 0;
  bool no_highlight = false, no_boundary = false, no_pruning = false, no_cross = false;
  edit->add_option("--manifest", manifest_path, "scene manifest JSON")->required();
  edit->add_option("--out-dir", out_dir, "directory for plan_*.json")->required();
  edit->add_option("--rules", rules_path, "highlight rule file");
  edit->add_option("--k", top_k, "clips to expand into windows");
  edit->add_flag("--no-highlight", no_highlight, "skip highlight detection");
  edit->add_flag("--no-boundary", no_boundary, "accept every boundary candidate");
  edit->add_flag("--no-pruning", no_pruning, "keep every window scene");
  edit->add_flag("--no-cross-episode", no_cross, "break highlight runs at episode joins");

  auto* baseline = app.add_subcommand("baseline", "single-call end-to-end edit");
  std::string b_manifest, b_mode, b_rules, b_out;
  std::vector<std::string> b_transcripts;
  baseline->add_option("--manifest", b_manifest, "scene manifest JSON")->required();
  baseline->add_option("--mode", b_mode, "narration | asr")->required();
  baseline->add_option("--transcript", b_transcripts,
                       "transcript file, optionally \"<episode>:<path>\" (asr mode)");
  baseline->add_option("--rules", b_rules, "highlight rule file");
  baseline->add_option("--out", b_out, "plan output path")->required();

  auto* metrics_cmd = app.add_subcommand("metrics", "score plans against viewer logs");
  std::vector<std::string> m_plans;
  std::string m_plans_dir, m_logs, m_reference, m_out;
  metrics_cmd->add_option("--plan", m_plans, "plan file (repeatable)");
  metrics_cmd->add_option("--plans-dir", m_plans_dir, "directory of plan_*.json");
  metrics_cmd->add_option("--logs", m_logs, "annotation logs JSONL");
  metrics_cmd->add_option("--reference", m_reference, "reference edit for precision/recall");
  metrics_cmd->add_option("--out", m_out, "report JSON output path");

  auto* export_cmd = app.add_subcommand("export", "plan -> ffmpeg cut list");
  std::string e_plan, e_sources, e_out_dir, e_stem = "edit";
  export_cmd->add_option("--plan", e_plan, "plan file")->required();
  export_cmd->add_option("--sources", e_sources, "episode source files JSON")->required();
  export_cmd->add_option("--out-dir", e_out_dir, "output directory")->required();
  export_cmd->add_option("--stem", e_stem, "output file stem");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  log::set_quiet(common.quiet);
  try {
    if (understand->parsed()) {
      return cmd_understand(common, job_path, manifest_out, details_out);
    }
    if (edit->parsed()) {
      return cmd_edit(common, manifest_path, out_dir, rules_path, top_k, no_highlight,
                      no_boundary, no_pruning, no_cross);
    }
    if (baseline->parsed()) {
      return cmd_baseline(common, b_manifest, b_mode, b_transcripts, b_rules, b_out);
    }
    if (metrics_cmd->parsed()) {
      return cmd_metrics(m_plans, m_plans_dir, m_logs, m_reference, m_out);
    }
    if (export_cmd->parsed()) {
      return cmd_export(e_plan, e_sources, e_out_dir, e_stem);
    }
    throw ConfigError("no command given");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ProviderError& e) {
    std::cerr << "provider error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hive::cli
