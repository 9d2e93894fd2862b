#include "hive/io/plan_io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "hive/core/errors.hpp"
#include "hive/io/fs.hpp"

namespace hive::io {

namespace {

using nlohmann::json;

void validate_plan(const EditPlan& plan, const std::string& origin) {
  if (plan.plan_id.empty()) {
    throw ValidationError("plan " + origin + ": plan_id must be non-empty");
  }
  if (plan.cuts.empty()) {
    throw ValidationError("plan " + origin + ": needs at least one cut");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < plan.cuts.size(); ++i) {
    const auto& cut = plan.cuts[i];
    if (!cut.valid()) {
      std::ostringstream os;
      os << "plan " << origin << ": cut " << i << " is not a valid interval";
      throw ValidationError(os.str());
    }
    if (i > 0) {
      const auto& prev = plan.cuts[i - 1];
      const bool ordered = prev.episode_id < cut.episode_id ||
                           (prev.episode_id == cut.episode_id && prev.end_ms <= cut.start_ms);
      if (!ordered) {
        std::ostringstream os;
        os << "plan " << origin << ": cut " << i << " overlaps or precedes cut " << i - 1;
        throw ValidationError(os.str());
      }
    }
    total += cut.duration_ms();
  }
  if (total != plan.total_duration_ms) {
    std::ostringstream os;
    os << "plan " << origin << ": total_duration_ms " << plan.total_duration_ms
       << " does not equal the summed cut length " << total;
    throw ValidationError(os.str());
  }
}

}  // namespace

void save_plan(const EditPlan& plan, const std::filesystem::path& path) {
  validate_plan(plan, plan.plan_id);
  json doc;
  doc["format_version"] = 1;
  doc["plan_id"] = plan.plan_id;
  doc["total_duration_ms"] = plan.total_duration_ms;
  doc["cuts"] = json::array();
  for (const auto& cut : plan.cuts) {
    doc["cuts"].push_back(
        {{"episode_id", cut.episode_id}, {"start_ms", cut.start_ms}, {"end_ms", cut.end_ms}});
  }
  doc["provenance"] = {{"kind", plan.provenance.kind},
                       {"clip_first_index", plan.provenance.clip_first_index},
                       {"clip_last_index", plan.provenance.clip_last_index},
                       {"opening_index", plan.provenance.opening_index},
                       {"ending_index", plan.provenance.ending_index},
                       {"pruned_indices", plan.provenance.pruned_indices}};
  write_file_atomic(path, doc.dump(2) + "\n");
}

EditPlan load_plan(const std::filesystem::path& path) {
  const std::string origin = path.string();
  const json doc = json::parse(read_file(path), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ParseError(ParseErrorKind::Malformed, "plan " + origin + " is not valid JSON");
  }
  if (!doc.is_object() || !doc.contains("plan_id") || !doc["plan_id"].is_string() ||
      !doc.contains("cuts") || !doc["cuts"].is_array() || !doc.contains("total_duration_ms") ||
      !doc["total_duration_ms"].is_number_integer()) {
    throw ValidationError("plan " + origin +
                          ": must be {plan_id, cuts[], total_duration_ms, provenance}");
  }

  EditPlan plan;
  plan.plan_id = doc["plan_id"].get<std::string>();
  plan.total_duration_ms = doc["total_duration_ms"].get<std::int64_t>();
  for (std::size_t i = 0; i < doc["cuts"].size(); ++i) {
    const auto& c = doc["cuts"][i];
    if (!c.is_object() || !c.contains("episode_id") || !c.contains("start_ms") ||
        !c.contains("end_ms") || !c["episode_id"].is_number_integer() ||
        !c["start_ms"].is_number_integer() || !c["end_ms"].is_number_integer()) {
      std::ostringstream os;
      os << "plan " << origin << ": /cuts/" << i
         << " must be {episode_id: int, start_ms: int, end_ms: int}";
      throw ValidationError(os.str());
    }
    plan.cuts.push_back({c["episode_id"].get<EpisodeId>(), c["start_ms"].get<std::int64_t>(),
                         c["end_ms"].get<std::int64_t>()});
  }
  if (doc.contains("provenance")) {
    const auto& p = doc["provenance"];
    if (!p.is_object()) {
      throw ValidationError("plan " + origin + ": /provenance must be an object");
    }
    if (p.contains("kind") && p["kind"].is_string()) {
      plan.provenance.kind = p["kind"].get<std::string>();
    }
    auto read_int = [&](const char* key, int& into) {
      if (p.contains(key) && p[key].is_number_integer()) {
        into = p[key].get<int>();
      }
    };
    read_int("clip_first_index", plan.provenance.clip_first_index);
    read_int("clip_last_index", plan.provenance.clip_last_index);
    read_int("opening_index", plan.provenance.opening_index);
    read_int("ending_index", plan.provenance.ending_index);
    if (p.contains("pruned_indices")) {
      if (!p["pruned_indices"].is_array()) {
        throw ValidationError("plan " + origin + ": /provenance/pruned_indices must be an array");
      }
      for (const auto& g : p["pruned_indices"]) {
        if (!g.is_number_integer()) {
          throw ValidationError("plan " + origin +
                                ": /provenance/pruned_indices must hold integers");
        }
        plan.provenance.pruned_indices.push_back(g.get<int>());
      }
    }
  }
  validate_plan(plan, origin);
  return plan;
}

std::vector<EditPlan> load_plans_from_dir(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw ConfigError("not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.rfind("plan_", 0) == 0 &&
        name.size() > 5 + 5 && name.substr(name.size() - 5) == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<EditPlan> plans;
  for (const auto& file : files) {
    plans.push_back(load_plan(file));
  }
  return plans;
}

}  // namespace hive::io
