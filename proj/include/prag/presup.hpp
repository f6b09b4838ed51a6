#ifndef PRAG_PRESUP_HPP
#define PRAG_PRESUP_HPP

#include <set>
#include <string>
#include <vector>

#include "prag/dynamics.hpp"
#include "prag/presupposition.hpp"

namespace prag {

struct PresupResolution {
  Term term;
  bool bound;  // false = accommodated
};

// Binding first: the most recent accessible referent whose head matches the
// descriptor's predicate with compatible features. Otherwise accommodation at
// the frame trap_scope picks (policy global/trapped), or failure (policy off).
PresupResolution resolve_presupposition(Context& ctx, const Presupposition& p, Policy policy);

// The frame index a presupposition with the given free variables may project
// to: the deepest frame that binds any of them (Universal binder or local
// introduction), Top when none does. A presupposition can never outscope a
// binder of one of its free variables.
int trap_scope(const std::set<std::string>& free, const std::vector<ScopeFrame>& stack);

// Mints a fresh referent at the frame, records the instantiated descriptor
// (head + extras) as an accommodated condition at that level, and returns the
// new term.
Term accommodate(Context& ctx, int frame_index, const Presupposition& p);

// Free variables of the descriptor and extras (non-hole Var arguments).
std::set<std::string> pattern_free_vars(const Presupposition& p);

}  // namespace prag

#endif  // PRAG_PRESUP_HPP
