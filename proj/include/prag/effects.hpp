#ifndef PRAG_EFFECTS_HPP
#define PRAG_EFFECTS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prag/errors.hpp"
#include "prag/features.hpp"
#include "prag/logic.hpp"
#include "prag/presupposition.hpp"

namespace prag {

template <typename A>
class Computation;

// The result a handler passes back to a continuation: a term for the
// referent-valued operations, a formula for the scope-taking ones.
using Payload = std::variant<Term, Formula>;

// Bring a referent into the discourse. `hint` is the predicate head of the
// introducing noun (used later for presupposition binding); `constant` is set
// for proper names, which reuse an existing referent of the same name.
struct IntroduceOp {
  FeatureSet features;
  std::string hint;
  std::optional<std::string> constant;
};

// Pick an accessible referent satisfying the constraints.
struct SelectOp {
  FeatureSet constraints;
};

// Raise a presupposition; the handler binds it or accommodates it.
struct PresupposeOp {
  Presupposition presup;
};

// Universal quantification as a scope-taking operation: the handler supplies
// the binder, runs restrictor and nucleus in a fresh scope frame, and resumes
// with the finished formula.
struct QuantifyOp {
  FeatureSet features;
  std::string hint;
  std::function<Computation<Formula>(const Term&)> restrictor;
  std::function<Computation<Formula>(const Term&)> nucleus;
};

// Negation scope: the handler runs the body in a frame whose referents do not
// survive, and resumes with the negated formula.
struct BarrierOp {
  std::shared_ptr<const Computation<Formula>> body;
};

using EffectOp = std::variant<IntroduceOp, SelectOp, PresupposeOp, QuantifyOp, BarrierOp>;

const char* op_name(const EffectOp& op);

// A deeply embedded effectful computation: either a finished value or an
// operation with a continuation expecting that operation's payload.
// Immutable; copies share structure.
template <typename A>
class Computation {
 public:
  using Cont = std::function<Computation<A>(const Payload&)>;

  static Computation pure(A value) {
    Node n;
    n.value = std::move(value);
    return Computation(std::make_shared<const Node>(std::move(n)));
  }

  static Computation perform(EffectOp op, Cont cont) {
    Node n;
    n.op = std::move(op);
    n.cont = std::move(cont);
    return Computation(std::make_shared<const Node>(std::move(n)));
  }

  bool is_pure() const { return node_->value.has_value(); }
  const A& value() const { return *node_->value; }
  const EffectOp& op() const { return *node_->op; }
  Computation resume(const Payload& payload) const { return node_->cont(payload); }

 private:
  struct Node {
    std::optional<A> value;
    std::optional<EffectOp> op;
    Cont cont;
  };
  explicit Computation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Comp = Computation<Formula>;

// Monadic sequencing: grafts f onto every pure leaf, preserving the operation
// spine in order.
template <typename A, typename B>
Computation<B> bind(const Computation<A>& c,
                    const std::function<Computation<B>(const A&)>& f) {
  if (c.is_pure()) return f(c.value());
  return Computation<B>::perform(c.op(), [c, f](const Payload& p) -> Computation<B> {
    return prag::bind<A, B>(c.resume(p), f);
  });
}

inline Comp seq(const Comp& c, std::function<Comp(const Formula&)> f) {
  return bind<Formula, Formula>(c, std::move(f));
}

// Continuation adapters for the two payload shapes.
Comp perform_term(EffectOp op, std::function<Comp(const Term&)> k);
Comp perform_formula(EffectOp op, std::function<Comp(const Formula&)> k);

// One record per handled operation. Rendered as `<op> <args> -> <result>`.
struct TraceEntry {
  std::string op;
  std::string args;
  std::string result;
  bool operator==(const TraceEntry&) const = default;
};
using Trace = std::vector<TraceEntry>;

std::string render(const TraceEntry& entry);
std::vector<std::string> render(const Trace& trace);

class Runner;

// Handler clauses. A clause computes the payload for one operation and may
// run subcomputations through the Runner (Quantify, Barrier). Missing clauses
// raise UnhandledEffect.
class Handler {
 public:
  virtual ~Handler() = default;

  struct PresupOutcome {
    Term term;
    bool bound;  // false = accommodated
  };

  virtual Term on_introduce(const IntroduceOp&, Runner&) {
    throw UnhandledEffectError("introduce");
  }
  virtual Term on_select(const SelectOp&, Runner&) { throw UnhandledEffectError("select"); }
  virtual PresupOutcome on_presuppose(const PresupposeOp&, Runner&) {
    throw UnhandledEffectError("presuppose");
  }
  virtual Formula on_quantify(const QuantifyOp&, Runner&) {
    throw UnhandledEffectError("quantify");
  }
  virtual Formula on_barrier(const BarrierOp&, Runner&) { throw UnhandledEffectError("barrier"); }
};

// Drives one handler over a computation, recording the trace in preorder:
// each operation's record precedes the records of any subcomputations its
// clause runs.
class Runner {
 public:
  explicit Runner(Handler& handler) : handler_(handler) {}

  Formula run(const Comp& c);
  const Trace& trace() const { return trace_; }

  // Called by clauses to report operation arguments chosen at handling time
  // (e.g. the binder a quantify clause minted).
  void set_current_args(const std::string& args);

 private:
  Payload dispatch(const EffectOp& op);

  Handler& handler_;
  Trace trace_;
  std::vector<std::size_t> active_;  // indices of entries being handled
};

struct HandleResult {
  Formula value;
  Trace trace;
};

// Applies the handler to the computation; on error the partial trace is
// attached to the exception.
HandleResult handle(Handler& h, const Comp& c);

}  // namespace prag

#endif  // PRAG_EFFECTS_HPP
