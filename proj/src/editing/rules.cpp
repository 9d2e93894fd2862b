#include "hive/editing/rules.hpp"

#include <sstream>

#include "json.hpp"

#include "hive/core/errors.hpp"
#include "hive/io/fs.hpp"

namespace hive::editing {

std::string to_string(Audience audience) {
  return audience == Audience::Male ? "male" : "female";
}

Audience audience_from_string(const std::string& name) {
  if (name == "male") {
    return Audience::Male;
  }
  if (name == "female") {
    return Audience::Female;
  }
  throw ValidationError("unknown audience: \"" + name + "\" (expected \"male\" or \"female\")");
}

HighlightRuleSet load_rule_set(const std::filesystem::path& path) {
  const std::string text = io::read_file(path);
  const auto doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ParseError(ParseErrorKind::Malformed, "rule file is not valid JSON: " + path.string());
  }
  if (!doc.is_object() || !doc.contains("audience") || !doc.contains("rules") ||
      !doc["rules"].is_array()) {
    throw ValidationError("rule file must be {audience, rules[]}: " + path.string());
  }
  if (!doc["audience"].is_string()) {
    throw ValidationError("rule file /audience must be a string: " + path.string());
  }

  HighlightRuleSet set;
  set.audience = audience_from_string(doc["audience"].get<std::string>());
  for (std::size_t i = 0; i < doc["rules"].size(); ++i) {
    const auto& r = doc["rules"][i];
    std::ostringstream at;
    at << "rule file /rules/" << i;
    if (!r.is_object() || !r.contains("pattern") || !r.contains("points") ||
        !r["pattern"].is_string() || !r["points"].is_number_integer()) {
      throw ValidationError(at.str() + " must be {pattern: string, points: int}");
    }
    HighlightRule rule{r["pattern"].get<std::string>(), r["points"].get<int>()};
    if (rule.pattern.empty()) {
      throw ValidationError(at.str() + ": pattern must be non-empty");
    }
    if (rule.points < 1 || rule.points > 3) {
      throw ValidationError(at.str() + ": points must be 1, 2 or 3");
    }
    set.rules.push_back(std::move(rule));
  }
  if (set.rules.empty()) {
    throw ValidationError("rule file has no rules: " + path.string());
  }
  return set;
}

void save_rule_set(const HighlightRuleSet& set, const std::filesystem::path& path) {
  nlohmann::json doc;
  doc["format_version"] = 1;
  doc["audience"] = to_string(set.audience);
  doc["rules"] = nlohmann::json::array();
  for (const auto& rule : set.rules) {
    doc["rules"].push_back({{"pattern", rule.pattern}, {"points", rule.points}});
  }
  io::write_file_atomic(path, doc.dump(2) + "\n");
}

std::string render_rules(const HighlightRuleSet& set) {
  std::ostringstream os;
  for (const auto& rule : set.rules) {
    os << "- " << rule.pattern << " (" << rule.points
       << (rule.points == 1 ? " point)" : " points)") << "\n";
  }
  return os.str();
}

}  // namespace hive::editing
