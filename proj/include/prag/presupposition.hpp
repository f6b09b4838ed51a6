#ifndef PRAG_PRESUPPOSITION_HPP
#define PRAG_PRESUPPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "prag/errors.hpp"
#include "prag/features.hpp"
#include "prag/logic.hpp"

namespace prag {

// One atom of presupposed content: a predicate applied to terms, with the
// entity being described marked as the hole (an empty slot).
struct PresupPattern {
  std::string pred;
  std::vector<std::optional<Term>> args;  // nullopt = the hole
};

// The payload of a presuppose effect: the head descriptor, any extra atoms
// contributed by a relative clause, the features of the described entity, and
// the surface text used in failure messages.
struct Presupposition {
  PresupPattern descriptor;
  std::vector<PresupPattern> extras;
  FeatureSet features;
  std::string source;
};

enum class Policy { Global, Trapped, Off };

inline const char* to_string(Policy p) {
  switch (p) {
    case Policy::Global: return "global";
    case Policy::Trapped: return "trapped";
    case Policy::Off: return "off";
  }
  return "global";
}

inline Policy policy_from_string(const std::string& s) {
  if (s == "global") return Policy::Global;
  if (s == "trapped") return Policy::Trapped;
  if (s == "off") return Policy::Off;
  throw PragError("unknown accommodation policy: " + s);
}

// Instantiates a pattern by plugging the term into the hole.
Formula instantiate(const PresupPattern& pattern, const Term& hole);

// "kof(_)", "wife(_,x1)" — the descriptor with the hole shown as '_'.
std::string render_pattern(const PresupPattern& pattern);

}  // namespace prag

#endif  // PRAG_PRESUPPOSITION_HPP
