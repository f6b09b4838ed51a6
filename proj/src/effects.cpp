#include "prag/effects.hpp"

namespace prag {

const char* op_name(const EffectOp& op) {
  switch (op.index()) {
    case 0: return "introduce";
    case 1: return "select";
    case 2: return "presuppose";
    case 3: return "quantify";
    case 4: return "barrier";
  }
  return "?";
}

Comp perform_term(EffectOp op, std::function<Comp(const Term&)> k) {
  return Comp::perform(std::move(op),
                       [k = std::move(k)](const Payload& p) { return k(std::get<Term>(p)); });
}

Comp perform_formula(EffectOp op, std::function<Comp(const Formula&)> k) {
  return Comp::perform(std::move(op),
                       [k = std::move(k)](const Payload& p) { return k(std::get<Formula>(p)); });
}

std::string render(const TraceEntry& entry) {
  std::string out = entry.op;
  if (!entry.args.empty()) out += " " + entry.args;
  out += " -> " + entry.result;
  return out;
}

std::vector<std::string> render(const Trace& trace) {
  std::vector<std::string> out;
  out.reserve(trace.size());
  for (const TraceEntry& e : trace) out.push_back(render(e));
  return out;
}

void Runner::set_current_args(const std::string& args) {
  if (!active_.empty()) trace_[active_.back()].args = args;
}

Payload Runner::dispatch(const EffectOp& op) {
  std::size_t idx = trace_.size();
  trace_.push_back(TraceEntry{op_name(op), "", ""});
  active_.push_back(idx);
  Payload payload = Formula::truth();
  switch (op.index()) {
    case 0: {
      const auto& o = std::get<IntroduceOp>(op);
      trace_[idx].args = render_features(o.features);
      Term t = handler_.on_introduce(o, *this);
      trace_[idx].result = t.name();
      payload = t;
      break;
    }
    case 1: {
      const auto& o = std::get<SelectOp>(op);
      trace_[idx].args = render_features(o.constraints);
      Term t = handler_.on_select(o, *this);
      trace_[idx].result = t.name();
      payload = t;
      break;
    }
    case 2: {
      const auto& o = std::get<PresupposeOp>(op);
      trace_[idx].args = render_pattern(o.presup.descriptor);
      Handler::PresupOutcome outcome = handler_.on_presuppose(o, *this);
      trace_[idx].result =
          (outcome.bound ? "bound " : "accommodated ") + outcome.term.name();
      payload = outcome.term;
      break;
    }
    case 3: {
      const auto& o = std::get<QuantifyOp>(op);
      Formula f = handler_.on_quantify(o, *this);
      trace_[idx].result = "forall-formula";
      payload = std::move(f);
      break;
    }
    case 4: {
      const auto& o = std::get<BarrierOp>(op);
      Formula f = handler_.on_barrier(o, *this);
      trace_[idx].result = "negated-formula";
      payload = std::move(f);
      break;
    }
  }
  active_.pop_back();
  return payload;
}

Formula Runner::run(const Comp& c) {
  Comp current = c;
  while (!current.is_pure()) {
    Payload payload = dispatch(current.op());
    current = current.resume(payload);
  }
  return current.value();
}

HandleResult handle(Handler& h, const Comp& c) {
  Runner runner(h);
  try {
    Formula value = runner.run(c);
    return HandleResult{std::move(value), runner.trace()};
  } catch (PragError& e) {
    e.attach_trace(render(runner.trace()));
    throw;
  }
}

}  // namespace prag
