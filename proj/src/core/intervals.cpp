#include "hive/core/intervals.hpp"

#include <algorithm>
#include <sstream>

#include "hive/core/errors.hpp"

namespace hive::intervals {

std::vector<TimeInterval> coalesce(std::vector<TimeInterval> intervals) {
  for (const TimeInterval& iv : intervals) {
    if (!iv.valid()) {
      std::ostringstream os;
      os << "malformed interval: episode " << iv.episode_id << " [" << iv.start_ms << ", "
         << iv.end_ms << ")";
      throw ValidationError(os.str());
    }
  }
  std::sort(intervals.begin(), intervals.end());
  std::vector<TimeInterval> merged;
  for (const TimeInterval& iv : intervals) {
    if (!merged.empty() && merged.back().episode_id == iv.episode_id &&
        iv.start_ms <= merged.back().end_ms) {
      merged.back().end_ms = std::max(merged.back().end_ms, iv.end_ms);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

std::int64_t union_duration_ms(const std::vector<TimeInterval>& intervals) {
  std::int64_t total = 0;
  for (const TimeInterval& iv : coalesce(intervals)) {
    total += iv.duration_ms();
  }
  return total;
}

std::vector<TimeInterval> intersect(const std::vector<TimeInterval>& a,
                                    const std::vector<TimeInterval>& b) {
  const std::vector<TimeInterval> ma = coalesce(a);
  const std::vector<TimeInterval> mb = coalesce(b);
  std::vector<TimeInterval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ma.size() && j < mb.size()) {
    const TimeInterval& x = ma[i];
    const TimeInterval& y = mb[j];
    if (x.episode_id == y.episode_id) {
      const std::int64_t lo = std::max(x.start_ms, y.start_ms);
      const std::int64_t hi = std::min(x.end_ms, y.end_ms);
      if (lo < hi) {
        out.push_back({x.episode_id, lo, hi});
      }
    }
    // Advance whichever interval ends first in (episode, end) order.
    if (std::make_pair(x.episode_id, x.end_ms) < std::make_pair(y.episode_id, y.end_ms)) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

double interval_iou(const std::vector<TimeInterval>& a, const std::vector<TimeInterval>& b) {
  if (a.empty() && b.empty()) {
    throw ValidationError("IoU is undefined for two empty interval lists");
  }
  std::vector<TimeInterval> all = a;
  all.insert(all.end(), b.begin(), b.end());
  const std::int64_t union_ms = union_duration_ms(all);
  const std::int64_t inter_ms = union_duration_ms(intersect(a, b));
  return static_cast<double>(inter_ms) / static_cast<double>(union_ms);
}

}  // namespace hive::intervals
