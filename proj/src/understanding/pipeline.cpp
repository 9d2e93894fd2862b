#include "hive/understanding/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hive/core/errors.hpp"
#include "hive/core/log.hpp"
#include "hive/core/parallel.hpp"
#include "hive/understanding/captioning.hpp"
#include "hive/understanding/dialogue.hpp"
#include "hive/understanding/face_clustering.hpp"
#include "hive/understanding/memory.hpp"
#include "hive/understanding/result_block.hpp"
#include "hive/understanding/scene_segmentation.hpp"
#include "hive/understanding/speaker_fusion.hpp"

namespace hive::understanding {

namespace {

void validate_inputs(const std::vector<EpisodeInputs>& inputs) {
  if (inputs.empty()) {
    throw ValidationError("run_understanding: no episodes given");
  }
  std::set<EpisodeId> seen;
  for (const auto& ep : inputs) {
    if (ep.episode_id <= 0) {
      throw ValidationError("run_understanding: episode ids must be positive");
    }
    if (!seen.insert(ep.episode_id).second) {
      throw ValidationError("run_understanding: duplicate episode id");
    }
    if (ep.duration_ms <= 0) {
      throw ValidationError("run_understanding: episode duration must be positive");
    }
    for (const auto b : ep.shot_boundaries) {
      if (b < 0 || b > ep.duration_ms) {
        throw ValidationError("run_understanding: shot boundary outside the episode span");
      }
    }
    for (const auto& line : ep.asr) {
      if (line.interval.episode_id != ep.episode_id || !line.interval.valid() ||
          line.interval.end_ms > ep.duration_ms) {
        throw ValidationError("run_understanding: ASR line outside the episode span");
      }
    }
  }
}

// Pads detected boundaries to a full partition of [0, duration_ms].
std::vector<std::int64_t> full_boundaries(const EpisodeInputs& ep) {
  std::vector<std::int64_t> b = ep.shot_boundaries;
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (b.empty() || b.front() != 0) {
    b.insert(b.begin(), 0);
  }
  if (b.back() != ep.duration_ms) {
    b.push_back(ep.duration_ms);
  }
  return b;
}

std::string surrounding_text(const std::vector<DialogueLine>& lines, std::size_t index,
                             std::size_t radius = 2) {
  std::ostringstream os;
  const std::size_t first = index >= radius ? index - radius : 0;
  const std::size_t last = std::min(lines.size() - 1, index + radius);
  for (std::size_t i = first; i <= last; ++i) {
    os << (i == index ? ">> " : "   ");
    os << (lines[i].speaker ? *lines[i].speaker : std::string("?")) << ": " << lines[i].text
       << "\n";
  }
  return os.str();
}

}  // namespace

UnderstandingResult run_understanding(const std::vector<EpisodeInputs>& inputs,
                                      providers::LlmProvider& llm,
                                      providers::ShotFusionClassifier& classifier,
                                      const UnderstandingOptions& options) {
  validate_inputs(inputs);
  if (options.n_speaker_voters < 1) {
    throw ValidationError("run_understanding: n_speaker_voters must be at least 1");
  }

  std::vector<const EpisodeInputs*> episodes;
  for (const auto& ep : inputs) {
    episodes.push_back(&ep);
  }
  std::sort(episodes.begin(), episodes.end(),
            [](const auto* a, const auto* b) { return a->episode_id < b->episode_id; });

  const PromptContext ctx{options.title, options.audience, options.model};
  MemoryStore memory;
  UnderstandingResult result;

  // Identity groups first: cluster faces jointly across all episodes so that
  // a character keeps one cluster id from pilot to finale.
  std::vector<std::vector<double>> embeddings;
  for (const auto* ep : episodes) {
    for (const auto& face : ep->faces) {
      embeddings.push_back(face.embedding);
    }
  }
  std::vector<int> face_clusters;
  if (!embeddings.empty()) {
    face_clusters = cluster_faces(embeddings, options.face_similarity_threshold);
  }
  std::vector<int> known_cluster_ids;
  {
    std::set<int> ids(face_clusters.begin(), face_clusters.end());
    known_cluster_ids.assign(ids.begin(), ids.end());
  }

  std::vector<Scene> all_scenes;
  static const std::vector<FieldSpec> extraction_schema = {
      {"name", FieldKind::String},
      {"description", FieldKind::String},
      {"face_cluster_id", FieldKind::Integer, /*required=*/false},
  };
  static const std::vector<FieldSpec> vote_schema = {
      {"speaker", FieldKind::String},
      {"confidence", FieldKind::Number, /*required=*/true, 0.0, 1.0},
      {"thought", FieldKind::String, /*required=*/false},
  };

  for (const auto* ep : episodes) {
    // 1. Transcript correction.
    auto correction = correct_dialogue(ep->asr, ep->ocr, llm, ctx);
    const std::size_t dialogue_offset = result.dialogue.size();
    for (std::size_t k = 0; k < correction.lines.size(); ++k) {
      if (correction.rejected[k]) {
        result.rejected_correction_lines.push_back(static_cast<int>(dialogue_offset + k));
      }
    }

    // 2. Scene segmentation.
    const auto boundaries = full_boundaries(*ep);
    const auto segmentation =
        segment_scenes(ep->episode_id, boundaries, classifier, llm, ctx);
    memory.register_episode(ep->episode_id, segmentation.boundaries);

    std::vector<Scene> scenes;
    for (std::size_t k = 0; k + 1 < segmentation.boundaries.size(); ++k) {
      Scene scene;
      scene.episode_id = ep->episode_id;
      scene.scene_id = static_cast<int>(k) + 1;
      scene.interval = {ep->episode_id, segmentation.boundaries[k],
                        segmentation.boundaries[k + 1]};
      scenes.push_back(std::move(scene));
    }

    // 3. Captioning, strictly in scene order: each prompt embeds the previous
    // scene's narration, so the chain cannot run concurrently.
    std::vector<std::string> narrations;
    for (auto& scene : scenes) {
      std::vector<DialogueLine> scene_dialogue;
      for (const auto& line : correction.lines) {
        if (line.interval.start_ms >= scene.interval.start_ms &&
            line.interval.start_ms < scene.interval.end_ms) {
          scene_dialogue.push_back(line);
          scene.dialogue_refs.push_back(line.id);
        }
      }
      try {
        scene.narration = caption_scene(scene, scene_dialogue, llm, memory, ctx);
      } catch (const CaptionError& err) {
        log::warn(err.what());
        scene.narration = "(captioning failed)";
        memory.record_narration(scene.episode_id, scene.scene_id, scene.narration);
        result.flagged_scenes.push_back({scene.episode_id, scene.scene_id, err.what()});
      }
      narrations.push_back(scene.narration);
    }

    // 4. Character extraction for this episode.
    const auto extraction_request =
        prompts::character_extraction(ctx, ep->episode_id, narrations, known_cluster_ids);
    const auto extraction = call_for_records(llm, extraction_request, extraction_schema);
    for (const auto& rec : extraction.records) {
      const auto name = rec.at("name").get<std::string>();
      if (name.empty()) {
        log::warn("ignoring extracted character with empty name");
        continue;
      }
      CharacterProfile profile;
      if (auto existing = memory.characters(); true) {
        for (const auto& p : existing) {
          if (p.id == name) {
            profile = p;
            break;
          }
        }
      }
      profile.id = name;
      const auto description = rec.at("description").get<std::string>();
      if (!description.empty() &&
          std::find(profile.descriptors.begin(), profile.descriptors.end(), description) ==
              profile.descriptors.end()) {
        profile.descriptors.push_back(description);
      }
      if (rec.contains("face_cluster_id")) {
        const int cluster = rec.at("face_cluster_id").get<int>();
        if (std::find(known_cluster_ids.begin(), known_cluster_ids.end(), cluster) ==
            known_cluster_ids.end()) {
          std::ostringstream os;
          os << "character " << name << " references unknown face cluster " << cluster;
          log::warn(os.str());
        } else {
          profile.face_cluster_id = cluster;
        }
      }
      memory.upsert_character(std::move(profile));
    }

    // 5. Speaker attribution by multi-voter fusion, using the roster known
    // after this episode's extraction. Lines are independent, so voter calls
    // may run concurrently up to the in-flight cap.
    const auto roster = memory.characters();
    if (!roster.empty() && !correction.lines.empty()) {
      std::vector<std::optional<CharacterId>> fused(correction.lines.size());
      parallel::for_each_index(
          correction.lines.size(), options.max_in_flight, [&](std::size_t i) {
            std::vector<SpeakerVote> votes;
            const std::string context_text = surrounding_text(correction.lines, i);
            for (int v = 1; v <= options.n_speaker_voters; ++v) {
              const auto request =
                  prompts::speaker_attribution(ctx, correction.lines[i], context_text, roster, v);
              const auto block = call_for_records(llm, request, vote_schema);
              if (block.records.size() != 1) {
                std::ostringstream os;
                os << "speaker vote for line " << correction.lines[i].id << " returned "
                   << block.records.size() << " records; expected 1 — skipping this vote";
                log::warn(os.str());
                continue;
              }
              std::ostringstream source;
              source << "llm_voter_" << v;
              votes.push_back({source.str(), block.records[0].at("speaker").get<std::string>(),
                               block.records[0].at("confidence").get<double>()});
            }
            fused[i] = fuse_speaker_votes(votes, options.fusion_threshold);
          });
      for (std::size_t i = 0; i < correction.lines.size(); ++i) {
        if (fused[i]) {
          correction.lines[i].speaker = fused[i];
        }
      }
    }

    // 6. Episode summary for the next episode's context.
    std::ostringstream summary;
    for (std::size_t i = 0; i < narrations.size(); ++i) {
      summary << (i ? " " : "") << narrations[i];
    }
    memory.record_episode_summary(ep->episode_id, summary.str());

    for (auto& line : correction.lines) {
      result.dialogue.push_back(std::move(line));
    }
    for (auto& scene : scenes) {
      all_scenes.push_back(std::move(scene));
    }
  }

  result.scenes = SceneSequence(std::move(all_scenes));
  result.characters = memory.characters();
  return result;
}

}  // namespace hive::understanding
