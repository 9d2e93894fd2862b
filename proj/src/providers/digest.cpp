#include "hive/providers/digest.hpp"

#include <cstdio>
#include <sstream>

namespace hive::providers {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= static_cast<std::uint64_t>(c);
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

std::string request_digest(const LlmRequest& request) {
  std::ostringstream os;
  os << request.model << '\x1f';
  for (const ChatMessage& m : request.messages) {
    os << m.role << '\x1e' << m.content << '\x1f';
  }
  char temp[32];
  std::snprintf(temp, sizeof(temp), "%.6f", request.temperature);
  os << temp;
  return fnv1a_hex(os.str());
}

std::string response_digest(const LlmResponse& response) { return fnv1a_hex(response.content); }

}  // namespace hive::providers
