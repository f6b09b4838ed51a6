#ifndef PRAG_FEATURES_HPP
#define PRAG_FEATURES_HPP

#include <map>
#include <string>

namespace prag {

// Morphosyntactic features used for anaphora resolution and binding.
// Currently the only known feature is gender with values m, f, n; unknown
// names or values are rejected when a lexicon is loaded.
using FeatureSet = std::map<std::string, std::string>;

// Every constraint pair must be present with the same value in `actual`.
inline bool features_satisfy(const FeatureSet& constraints, const FeatureSet& actual) {
  for (const auto& [key, value] : constraints) {
    auto it = actual.find(key);
    if (it == actual.end() || it->second != value) return false;
  }
  return true;
}

// No key mapped to two different values; missing keys do not conflict.
inline bool features_compatible(const FeatureSet& a, const FeatureSet& b) {
  for (const auto& [key, value] : a) {
    auto it = b.find(key);
    if (it != b.end() && it->second != value) return false;
  }
  return true;
}

// "{gender=m}", "{}" when empty; keys in sorted order.
inline std::string render_features(const FeatureSet& features) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : features) {
    if (!first) out += ",";
    out += key + "=" + value;
    first = false;
  }
  out += "}";
  return out;
}

// "gender=m" without braces, "-" when empty; used in context renderings.
inline std::string render_features_bare(const FeatureSet& features) {
  if (features.empty()) return "-";
  std::string out;
  bool first = true;
  for (const auto& [key, value] : features) {
    if (!first) out += ",";
    out += key + "=" + value;
    first = false;
  }
  return out;
}

}  // namespace prag

#endif  // PRAG_FEATURES_HPP
