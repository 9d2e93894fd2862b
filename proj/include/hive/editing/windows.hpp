#pragma once

#include <vector>

#include "hive/core/types.hpp"

namespace hive::editing {

struct ClipCandidates {
  HighlightClip clip;
  std::vector<int> openings;  // accepted opening indices, ascending
  std::vector<int> endings;   // accepted ending indices, ascending
};

// Cartesian product of accepted openings x endings per clip, deduplicated by
// (opening, ending) pair across clips — the earliest clip that produces a pair
// owns it. Order is deterministic: clips in the given order, openings
// ascending, endings ascending. Pairs with opening > ending are impossible by
// construction of the candidate sets and rejected defensively.
std::vector<EditWindow> enumerate_windows(const std::vector<ClipCandidates>& per_clip);

}  // namespace hive::editing
