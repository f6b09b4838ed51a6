#include "prag/presup.hpp"

#include <algorithm>

namespace prag {

Formula instantiate(const PresupPattern& pattern, const Term& hole) {
  std::vector<Term> args;
  args.reserve(pattern.args.size());
  for (const auto& slot : pattern.args) {
    args.push_back(slot ? *slot : hole);
  }
  return Formula::pred(pattern.pred, std::move(args));
}

std::string render_pattern(const PresupPattern& pattern) {
  std::string out = pattern.pred + "(";
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (i) out += ",";
    out += pattern.args[i] ? pattern.args[i]->name() : "_";
  }
  return out + ")";
}

std::set<std::string> pattern_free_vars(const Presupposition& p) {
  std::set<std::string> out;
  auto collect = [&out](const PresupPattern& pattern) {
    for (const auto& slot : pattern.args) {
      if (slot && slot->is_var()) out.insert(slot->name());
    }
  };
  collect(p.descriptor);
  for (const PresupPattern& extra : p.extras) collect(extra);
  return out;
}

int trap_scope(const std::set<std::string>& free, const std::vector<ScopeFrame>& stack) {
  for (int i = static_cast<int>(stack.size()) - 1; i >= 1; --i) {
    const ScopeFrame& frame = stack[i];
    auto binds = [&frame](const std::string& v) {
      if (frame.binder && frame.binder->name() == v) return true;
      if (std::find(frame.introduced.begin(), frame.introduced.end(), v) !=
          frame.introduced.end()) {
        return true;
      }
      return std::find(frame.nucleus_introduced.begin(), frame.nucleus_introduced.end(), v) !=
             frame.nucleus_introduced.end();
    };
    for (const std::string& v : free) {
      if (binds(v)) return i;
    }
  }
  return 0;
}

Term accommodate(Context& ctx, int frame_index, const Presupposition& p) {
  Term v = ctx.fresh_var();
  ctx.add_referent(v, p.features, p.descriptor.pred, frame_index);
  Formula condition = instantiate(p.descriptor, v);
  for (const PresupPattern& extra : p.extras) {
    condition = Formula::conj(std::move(condition), instantiate(extra, v));
  }
  const ScopeFrame& frame = ctx.scope_stack[frame_index];
  bool in_nucleus = frame.kind == ScopeFrame::Kind::Universal && frame.in_nucleus;
  ctx.accommodated.push_back(AccommodatedCondition{std::move(condition), frame_index, in_nucleus});
  return v;
}

PresupResolution resolve_presupposition(Context& ctx, const Presupposition& p, Policy policy) {
  // Binding is preferred: most recent accessible referent whose introduction
  // or accommodation head matches with compatible features.
  const Referent* best = nullptr;
  for (const Referent& r : ctx.referents) {
    if (r.head != p.descriptor.pred) continue;
    if (!features_compatible(p.features, r.features)) continue;
    if (!best || r.position > best->position) best = &r;
  }
  if (best) return PresupResolution{best->term, true};

  if (policy == Policy::Off) {
    throw PresuppositionFailureError(p.source, render_pattern(p.descriptor));
  }
  int frame = trap_scope(pattern_free_vars(p), ctx.scope_stack);
  return PresupResolution{accommodate(ctx, frame, p), false};
}

}  // namespace prag
