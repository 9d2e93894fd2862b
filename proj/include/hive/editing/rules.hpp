#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hive::editing {

enum class Audience { Male, Female };

std::string to_string(Audience audience);
Audience audience_from_string(const std::string& name);

// One plot pattern worth points when a scene matches it. Points are 1..3:
// 3 = core appeal for the audience, 1 = mildly engaging.
struct HighlightRule {
  std::string pattern;
  int points = 1;

  friend bool operator==(const HighlightRule&, const HighlightRule&) = default;
};

struct HighlightRuleSet {
  Audience audience = Audience::Male;
  std::vector<HighlightRule> rules;

  friend bool operator==(const HighlightRuleSet&, const HighlightRuleSet&) = default;
};

HighlightRuleSet load_rule_set(const std::filesystem::path& path);
void save_rule_set(const HighlightRuleSet& set, const std::filesystem::path& path);

// Renders the rule table as prompt text, one "- pattern (N points)" line each.
std::string render_rules(const HighlightRuleSet& set);

}  // namespace hive::editing
