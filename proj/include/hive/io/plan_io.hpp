#pragma once

#include <filesystem>
#include <vector>

#include "hive/core/types.hpp"

namespace hive::io {

// Plan files are canonical JSON (sorted keys, two-space indent, trailing
// newline) so identical plans always serialize byte-for-byte identically.
void save_plan(const EditPlan& plan, const std::filesystem::path& path);
EditPlan load_plan(const std::filesystem::path& path);

// Loads every plan_*.json in the directory, sorted by filename.
std::vector<EditPlan> load_plans_from_dir(const std::filesystem::path& dir);

}  // namespace hive::io
