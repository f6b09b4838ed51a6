#include "prag/dynamics.hpp"

#include <algorithm>
#include <cassert>

#include "prag/presup.hpp"

namespace prag {

void Context::add_referent(const Term& term, const FeatureSet& features, const std::string& head,
                           int level) {
  referents.push_back(Referent{term, features, head, next_position++, level, sentence});
  if (term.is_var()) {
    ScopeFrame& frame = scope_stack[level];
    if (frame.kind == ScopeFrame::Kind::Universal && frame.in_nucleus) {
      frame.nucleus_introduced.push_back(term.name());
    } else {
      frame.introduced.push_back(term.name());
    }
  }
}

Context::PoppedFrame Context::pop_frame() {
  assert(scope_stack.size() > 1);
  int level = current_level();
  PoppedFrame popped;
  popped.frame = scope_stack.back();
  scope_stack.pop_back();

  referents.erase(std::remove_if(referents.begin(), referents.end(),
                                 [level](const Referent& r) { return r.scope_level == level; }),
                  referents.end());

  std::vector<AccommodatedCondition> remaining;
  for (AccommodatedCondition& c : accommodated) {
    if (c.level != level) {
      remaining.push_back(std::move(c));
    } else if (c.in_nucleus) {
      popped.nucleus_conditions.push_back(std::move(c.condition));
    } else {
      popped.phase1_conditions.push_back(std::move(c.condition));
    }
  }
  accommodated = std::move(remaining);
  return popped;
}

Term select_antecedent(const Context& ctx, const FeatureSet& constraints, Strategy strategy) {
  (void)strategy;  // Recency is the only strategy
  const Referent* best = nullptr;
  for (const Referent& r : ctx.referents) {
    if (!features_satisfy(constraints, r.features)) continue;
    if (!best || r.position > best->position) best = &r;
  }
  if (!best) throw UnresolvedAnaphoraError(render_features(constraints));
  return best->term;
}

Formula existential_closure(Formula f, const std::vector<std::string>& vars) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    f = Formula::exists(*it, std::move(f));
  }
  return f;
}

Formula simplify_truth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::And: {
      Formula l = simplify_truth(f.lhs());
      Formula r = simplify_truth(f.rhs());
      if (l.is(Formula::Kind::Truth)) return r;
      if (r.is(Formula::Kind::Truth)) return l;
      return Formula::conj(std::move(l), std::move(r));
    }
    case Formula::Kind::Or:
      return Formula::disj(simplify_truth(f.lhs()), simplify_truth(f.rhs()));
    case Formula::Kind::Implies:
      return Formula::implies(simplify_truth(f.lhs()), simplify_truth(f.rhs()));
    case Formula::Kind::Not:
      return Formula::negate(simplify_truth(f.body()));
    case Formula::Kind::Exists:
      return Formula::exists(f.bound_var(), simplify_truth(f.body()));
    case Formula::Kind::Forall:
      return Formula::forall(f.bound_var(), simplify_truth(f.body()));
    default:
      return f;
  }
}

namespace {

// Conjunction with accommodated conditions first: And(a1, And(a2, core)).
Formula conj_conditions(const std::vector<Formula>& conditions, Formula core) {
  for (auto it = conditions.rbegin(); it != conditions.rend(); ++it) {
    core = Formula::conj(*it, std::move(core));
  }
  return core;
}

}  // namespace

Formula close_top(const Context& ctx, const Formula& open) {
  Formula core = simplify_truth(open);
  std::vector<Formula> conditions;
  for (const AccommodatedCondition& c : ctx.accommodated) {
    if (c.level == 0) conditions.push_back(c.condition);
  }
  core = conj_conditions(conditions, std::move(core));

  std::vector<const Referent*> top_vars;
  for (const Referent& r : ctx.referents) {
    if (r.scope_level == 0 && r.term.is_var()) top_vars.push_back(&r);
  }
  std::sort(top_vars.begin(), top_vars.end(),
            [](const Referent* a, const Referent* b) { return a->position < b->position; });
  std::vector<std::string> vars;
  vars.reserve(top_vars.size());
  for (const Referent* r : top_vars) vars.push_back(r->term.name());
  return existential_closure(std::move(core), vars);
}

std::string render_context(const Context& ctx) {
  std::string out;
  std::vector<const Referent*> ordered;
  for (const Referent& r : ctx.referents) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(),
            [](const Referent* a, const Referent* b) { return a->position < b->position; });
  for (const Referent* r : ordered) {
    std::string level;
    switch (ctx.scope_stack[r->scope_level].kind) {
      case ScopeFrame::Kind::Top: level = "top"; break;
      case ScopeFrame::Kind::Universal: level = "universal"; break;
      case ScopeFrame::Kind::Negation: level = "negation"; break;
    }
    out += r->term.name() + " " + render_features_bare(r->features) + " introduced-in:S" +
           std::to_string(r->sentence) + " level:" + level + "\n";
  }
  for (const AccommodatedCondition& c : ctx.accommodated) {
    out += pretty(c.condition) + "\n";
  }
  return out;
}

Term DynamicsHandler::on_introduce(const IntroduceOp& op, Runner&) {
  if (op.constant) {
    Term t = Term::constant(*op.constant);
    for (const Referent& r : ctx_.referents) {
      if (r.term == t) return r.term;  // names are write-once
    }
    // Proper names live at top level regardless of the current scope depth.
    ctx_.add_referent(t, op.features, op.hint, 0);
    return t;
  }
  Term v = ctx_.fresh_var();
  ctx_.add_referent(v, op.features, op.hint, ctx_.current_level());
  return v;
}

Term DynamicsHandler::on_select(const SelectOp& op, Runner&) {
  return select_antecedent(ctx_, op.constraints, strategy_);
}

Handler::PresupOutcome DynamicsHandler::on_presuppose(const PresupposeOp& op, Runner&) {
  PresupResolution res = resolve_presupposition(ctx_, op.presup, policy_);
  return PresupOutcome{res.term, res.bound};
}

Formula DynamicsHandler::on_quantify(const QuantifyOp& op, Runner& r) {
  ctx_.scope_stack.push_back(ScopeFrame{ScopeFrame::Kind::Universal, std::nullopt, {}, {}, false});
  int level = ctx_.current_level();
  Term binder = ctx_.fresh_var();
  ctx_.scope_stack[level].binder = binder;
  r.set_current_args(binder.name());
  // The binder is a referent of its own frame but is closed by the Forall
  // below, not by the restrictor-variable prefix.
  ctx_.referents.push_back(
      Referent{binder, op.features, op.hint, ctx_.next_position++, level, ctx_.sentence});

  Formula restrictor = r.run(op.restrictor(binder));
  ctx_.scope_stack[level].in_nucleus = true;
  Formula nucleus = r.run(op.nucleus(binder));

  Context::PoppedFrame popped = ctx_.pop_frame();
  Formula restrictor_full = conj_conditions(popped.phase1_conditions, std::move(restrictor));
  Formula nucleus_full = existential_closure(
      conj_conditions(popped.nucleus_conditions, std::move(nucleus)),
      popped.frame.nucleus_introduced);

  Formula out = Formula::implies(std::move(restrictor_full), std::move(nucleus_full));
  // Restrictor referents are universally closed over the whole implication
  // (strong reading), binder outermost.
  const std::vector<std::string>& rest_vars = popped.frame.introduced;
  for (auto it = rest_vars.rbegin(); it != rest_vars.rend(); ++it) {
    out = Formula::forall(*it, std::move(out));
  }
  return Formula::forall(binder.name(), std::move(out));
}

Formula DynamicsHandler::on_barrier(const BarrierOp& op, Runner& r) {
  ctx_.scope_stack.push_back(ScopeFrame{ScopeFrame::Kind::Negation, std::nullopt, {}, {}, false});
  Formula body = r.run(*op.body);
  Context::PoppedFrame popped = ctx_.pop_frame();
  std::vector<Formula> conditions = std::move(popped.phase1_conditions);
  for (Formula& c : popped.nucleus_conditions) conditions.push_back(std::move(c));
  Formula closed =
      existential_closure(conj_conditions(conditions, std::move(body)), popped.frame.introduced);
  return Formula::negate(std::move(closed));
}

DiscourseResult run_discourse(const Comp& c, Context ctx, Policy policy, Strategy strategy) {
  if (ctx.scope_stack.size() != 1 || ctx.scope_stack[0].kind != ScopeFrame::Kind::Top) {
    throw PragError("run_discourse requires a context at top level");
  }
  DynamicsHandler handler(std::move(ctx), policy, strategy);
  Runner runner(handler);
  Formula open;
  try {
    open = runner.run(c);
  } catch (PragError& e) {
    e.attach_trace(render(runner.trace()));
    throw;
  }
  Context out = handler.take_context();
  Formula closed = close_top(out, open);
  return DiscourseResult{std::move(open), std::move(closed), std::move(out), runner.trace()};
}

}  // namespace prag
