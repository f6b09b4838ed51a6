#ifndef PRAG_DYNAMICS_HPP
#define PRAG_DYNAMICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "prag/effects.hpp"
#include "prag/features.hpp"
#include "prag/logic.hpp"
#include "prag/presupposition.hpp"

namespace prag {

// A discourse referent: the store cell anaphora reads from. `head` is the
// predicate name of the introducing noun (or accommodated descriptor), used
// for presupposition binding.
struct Referent {
  Term term;
  FeatureSet features;
  std::string head;
  int position;     // global introduction order
  int scope_level;  // index into the scope stack
  int sentence;     // 1-based sentence of introduction
};

struct ScopeFrame {
  enum class Kind { Top, Universal, Negation };
  Kind kind = Kind::Top;
  std::optional<Term> binder;                   // Universal frames only
  std::vector<std::string> introduced;          // vars minted here (restrictor phase for Universal)
  std::vector<std::string> nucleus_introduced;  // vars minted during a Universal's nucleus
  bool in_nucleus = false;
};

// A condition added by accommodation, pending incorporation when its frame is
// popped (or at top-level closure for level 0).
struct AccommodatedCondition {
  Formula condition;
  int level;
  bool in_nucleus;
};

// The dynamic state of a discourse. A value type: sessions snapshot it by
// copying, and a failed sentence simply discards its copy.
struct Context {
  std::vector<Referent> referents;
  std::vector<ScopeFrame> scope_stack;
  int fresh_counter = 0;
  std::vector<AccommodatedCondition> accommodated;
  int next_position = 0;
  int sentence = 1;

  Context() { scope_stack.push_back(ScopeFrame{}); }

  int current_level() const { return static_cast<int>(scope_stack.size()) - 1; }

  Term fresh_var() { return Term::var("x" + std::to_string(++fresh_counter)); }

  // Registers a referent at the given level and records its variable in that
  // frame's current phase. Constants are never recorded for closure.
  void add_referent(const Term& term, const FeatureSet& features, const std::string& head,
                    int level);

  // Removes the top frame together with its referents; returns the frame and
  // the accommodated conditions recorded at its level, split by phase.
  struct PoppedFrame {
    ScopeFrame frame;
    std::vector<Formula> phase1_conditions;
    std::vector<Formula> nucleus_conditions;
  };
  PoppedFrame pop_frame();
};

enum class Strategy { Recency };

inline const char* to_string(Strategy) { return "recency"; }

// Universal restrictor referents stay accessible in the nucleus and are
// universally closed over the whole implication (the strong donkey reading).
// The weak reading would close them existentially inside the restrictor.
enum class DonkeyReading { Strong, Weak };
inline constexpr DonkeyReading kDonkeyReading = DonkeyReading::Strong;

// The accessible referent with the greatest position whose features satisfy
// all constraints; throws UnresolvedAnaphora when none matches.
Term select_antecedent(const Context& ctx, const FeatureSet& constraints, Strategy strategy);

// Exists-prefix over vars in introduction order (innermost = last introduced).
// Vars absent from f are still quantified.
Formula existential_closure(Formula f, const std::vector<std::string>& vars);

// Recursively drops Truth conjuncts: And(Truth, f) -> f.
Formula simplify_truth(const Formula& f);

// Closure of an open formula at the top level: top-level accommodated
// conditions are conjoined first, then the whole conjunction is closed over
// every top-level variable referent.
Formula close_top(const Context& ctx, const Formula& open);

// REPL rendering: one referent per line, then accommodated conditions.
std::string render_context(const Context& ctx);

// The composite handler: interprets Introduce/Select/Quantify/Barrier against
// the context and delegates Presuppose to the presupposition logic, which
// sees the same context and scope stack.
class DynamicsHandler : public Handler {
 public:
  DynamicsHandler(Context ctx, Policy policy, Strategy strategy)
      : ctx_(std::move(ctx)), policy_(policy), strategy_(strategy) {}

  Term on_introduce(const IntroduceOp& op, Runner& r) override;
  Term on_select(const SelectOp& op, Runner& r) override;
  PresupOutcome on_presuppose(const PresupposeOp& op, Runner& r) override;
  Formula on_quantify(const QuantifyOp& op, Runner& r) override;
  Formula on_barrier(const BarrierOp& op, Runner& r) override;

  const Context& context() const { return ctx_; }
  Context take_context() { return std::move(ctx_); }

 private:
  Context ctx_;
  Policy policy_;
  Strategy strategy_;
};

struct DiscourseResult {
  Formula open_formula;  // before top-level closure (Truth conjuncts intact)
  Formula formula;       // closed: accommodated conditions + existential closure
  Context context;
  Trace trace;
};

// Handles every operation in c against ctx. The context must be at top level
// (scope stack = [Top]); it is left at top level on success. On error the
// partial trace is attached to the exception.
DiscourseResult run_discourse(const Comp& c, Context ctx, Policy policy,
                              Strategy strategy = Strategy::Recency);

}  // namespace prag

#endif  // PRAG_DYNAMICS_HPP
