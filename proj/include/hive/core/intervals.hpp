#pragma once

#include <cstdint>
#include <vector>

#include "hive/core/types.hpp"

namespace hive::intervals {

// Sorts per episode and merges overlapping or touching intervals. Throws
// ValidationError on a malformed interval (start >= end, bad episode id).
std::vector<TimeInterval> coalesce(std::vector<TimeInterval> intervals);

// Measure of the union on the source timeline. Intervals in different
// episodes never overlap.
std::int64_t union_duration_ms(const std::vector<TimeInterval>& intervals);

std::vector<TimeInterval> intersect(const std::vector<TimeInterval>& a,
                                    const std::vector<TimeInterval>& b);

// Intersection-over-union of two edits' source-time footprints, in [0, 1].
// Throws ValidationError when both lists are empty (IoU undefined).
double interval_iou(const std::vector<TimeInterval>& a, const std::vector<TimeInterval>& b);

}  // namespace hive::intervals
