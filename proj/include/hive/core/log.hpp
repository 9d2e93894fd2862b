#pragma once

#include <iostream>
#include <mutex>
#include <string>

namespace hive::log {

namespace detail {
inline std::mutex& mutex() {
  static std::mutex m;
  return m;
}
inline bool& quiet_flag() {
  static bool quiet = false;
  return quiet;
}
}  // namespace detail

inline void set_quiet(bool quiet) { detail::quiet_flag() = quiet; }

inline void warn(const std::string& msg) {
  if (detail::quiet_flag()) return;
  std::lock_guard<std::mutex> lock(detail::mutex());
  std::cerr << "[warn] " << msg << "\n";
}

inline void info(const std::string& msg) {
  if (detail::quiet_flag()) return;
  std::lock_guard<std::mutex> lock(detail::mutex());
  std::cerr << "[info] " << msg << "\n";
}

}  // namespace hive::log
