#pragma once

#include <cstdint>
#include <string>

#include "hive/providers/provider.hpp"

namespace hive::providers {

// FNV-1a 64-bit over a byte string, rendered as 16 lowercase hex digits.
// Chosen over std::hash for a digest that is stable across platforms and
// toolchains, since fixture files key on it.
std::string fnv1a_hex(const std::string& bytes);

// Digest of the wire-visible request fields (model, messages, temperature).
// The internal task tag is excluded so fixtures survive task renames.
std::string request_digest(const LlmRequest& request);

std::string response_digest(const LlmResponse& response);

}  // namespace hive::providers
