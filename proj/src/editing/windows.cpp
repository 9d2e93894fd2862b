#include "hive/editing/windows.hpp"

#include <set>
#include <utility>

#include "hive/core/errors.hpp"

namespace hive::editing {

std::vector<EditWindow> enumerate_windows(const std::vector<ClipCandidates>& per_clip) {
  std::vector<EditWindow> windows;
  std::set<std::pair<int, int>> seen;
  for (const auto& cc : per_clip) {
    for (const int opening : cc.openings) {
      for (const int ending : cc.endings) {
        if (opening > ending) {
          throw ValidationError("enumerate_windows: opening index after ending index");
        }
        if (seen.insert({opening, ending}).second) {
          windows.push_back({cc.clip, opening, ending});
        }
      }
    }
  }
  return windows;
}

}  // namespace hive::editing
