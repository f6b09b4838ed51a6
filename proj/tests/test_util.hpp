#ifndef PRAG_TEST_UTIL_HPP
#define PRAG_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "prag/dynamics.hpp"
#include "prag/effects.hpp"
#include "prag/grammar.hpp"
#include "prag/logic.hpp"
#include "prag/models.hpp"
#include "prag/session.hpp"

namespace prag::test {

inline std::string data_path(const std::string& name) {
  return std::string(PRAG_DATA_DIR) + "/" + name;
}

inline Lexicon fragment_lexicon() { return load_lexicon(read_file(data_path("fragment.lex"))); }
inline Lexicon kof_lexicon() { return load_lexicon(read_file(data_path("kof.lex"))); }

// Tokenize + parse + fold + run in one step (the library route; the CLI goes
// sentence by sentence through a Session).
inline DiscourseResult run_text(const std::string& text, const Lexicon& lexicon,
                                Policy policy = Policy::Global) {
  std::vector<Token> tokens = tokenize(text);
  std::vector<ParsedSentence> sentences = parse(tokens, lexicon);
  return run_discourse(denote_discourse(sentences), Context{}, policy);
}

inline Signature sig(std::vector<std::pair<std::string, int>> preds) {
  Signature s;
  s.preds = std::move(preds);
  return s;
}

// Deterministic handler for observational tests: fresh probe variables for
// the term-valued ops, plain quantification for the scope-taking ones.
class ProbeHandler : public Handler {
 public:
  Term on_introduce(const IntroduceOp&, Runner&) override { return fresh(); }
  Term on_select(const SelectOp&, Runner&) override { return fresh(); }
  PresupOutcome on_presuppose(const PresupposeOp&, Runner&) override {
    return PresupOutcome{fresh(), false};
  }
  Formula on_quantify(const QuantifyOp& op, Runner& r) override {
    Term binder = fresh();
    r.set_current_args(binder.name());
    Formula restrictor = r.run(op.restrictor(binder));
    Formula nucleus = r.run(op.nucleus(binder));
    return Formula::forall(binder.name(), Formula::implies(restrictor, nucleus));
  }
  Formula on_barrier(const BarrierOp& op, Runner& r) override {
    return Formula::negate(r.run(*op.body));
  }

 private:
  Term fresh() { return Term::var("p" + std::to_string(++counter_)); }
  int counter_ = 0;
};

// A probe that handles everything except select.
class NoSelectProbe : public ProbeHandler {
 public:
  Term on_select(const SelectOp& op, Runner& r) override { return Handler::on_select(op, r); }
};

// Random effectful computations for the monad-law and trace tests. The
// shapes mirror what the grammar produces: term-valued ops feed a predicate
// over the payload, scope-taking ops carry subcomputations.
inline Comp random_computation(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  static const std::vector<FeatureSet> genders = {
      {{"gender", "m"}}, {{"gender", "f"}}, {{"gender", "n"}}};
  switch (pick(rng)) {
    case 0:
      return Comp::pure(Formula::pred("base", {Term::constant("c")}));
    case 1:
      return Comp::pure(Formula::truth());
    case 2: {
      Comp rest = random_computation(rng, depth - 1);
      FeatureSet f = genders[rng() % genders.size()];
      return perform_term(IntroduceOp{f, "noun", std::nullopt}, [rest](const Term& t) {
        return seq(rest, [t](const Formula& body) {
          return Comp::pure(Formula::conj(Formula::pred("intro", {t}), body));
        });
      });
    }
    case 3: {
      Comp rest = random_computation(rng, depth - 1);
      FeatureSet f = genders[rng() % genders.size()];
      return perform_term(SelectOp{f}, [rest](const Term& t) {
        return seq(rest, [t](const Formula& body) {
          return Comp::pure(Formula::conj(Formula::pred("sel", {t}), body));
        });
      });
    }
    case 4: {
      Comp rest = random_computation(rng, depth - 1);
      Presupposition p;
      p.descriptor = PresupPattern{"thing", {std::nullopt}};
      p.source = "the thing";
      return perform_term(PresupposeOp{p}, [rest](const Term& t) {
        return seq(rest, [t](const Formula& body) {
          return Comp::pure(Formula::conj(Formula::pred("presup", {t}), body));
        });
      });
    }
    case 5: {
      Comp restrictor_body = random_computation(rng, depth - 1);
      Comp nucleus_body = random_computation(rng, depth - 1);
      QuantifyOp op;
      op.features = genders[rng() % genders.size()];
      op.hint = "noun";
      op.restrictor = [restrictor_body](const Term& t) {
        return seq(restrictor_body, [t](const Formula& body) {
          return Comp::pure(Formula::conj(Formula::pred("restr", {t}), body));
        });
      };
      op.nucleus = [nucleus_body](const Term& t) {
        return seq(nucleus_body, [t](const Formula& body) {
          return Comp::pure(Formula::conj(Formula::pred("nucl", {t}), body));
        });
      };
      return perform_formula(op, [](const Formula& f) { return Comp::pure(f); });
    }
    default: {
      auto body = std::make_shared<const Comp>(random_computation(rng, depth - 1));
      return perform_formula(BarrierOp{body}, [](const Formula& f) { return Comp::pure(f); });
    }
  }
}

// A deterministic Formula -> Comp continuation built from a pre-generated
// computation, for the monad-law tests.
inline std::function<Comp(const Formula&)> random_kleisli(std::mt19937& rng, int depth) {
  Comp tail = random_computation(rng, depth);
  return [tail](const Formula& a) {
    return seq(tail, [a](const Formula& b) { return Comp::pure(Formula::conj(a, b)); });
  };
}

// Random closed formulas over a fixed signature, with constants drawn from
// the given pool. Quantifier depth is bounded by `budget`.
inline Formula random_closed_formula(std::mt19937& rng, int budget,
                                     std::vector<std::string> bound,
                                     const std::vector<std::string>& consts) {
  auto term = [&]() -> Term {
    if (!bound.empty() && rng() % 2 == 0) return Term::var(bound[rng() % bound.size()]);
    return Term::constant(consts[rng() % consts.size()]);
  };
  std::uniform_int_distribution<int> pick(0, budget <= 0 ? 2 : 8);
  switch (pick(rng)) {
    case 0:
      return Formula::pred("p", {term()});
    case 1:
      return Formula::pred("q", {term(), term()});
    case 2:
      return rng() % 2 ? Formula::truth() : Formula::falsity();
    case 3:
      return Formula::negate(random_closed_formula(rng, budget - 1, bound, consts));
    case 4:
      return Formula::conj(random_closed_formula(rng, budget - 1, bound, consts),
                           random_closed_formula(rng, budget - 1, bound, consts));
    case 5:
      return Formula::disj(random_closed_formula(rng, budget - 1, bound, consts),
                           random_closed_formula(rng, budget - 1, bound, consts));
    case 6:
      return Formula::implies(random_closed_formula(rng, budget - 1, bound, consts),
                              random_closed_formula(rng, budget - 1, bound, consts));
    default: {
      std::string v = "v" + std::to_string(bound.size() + 1);
      bound.push_back(v);
      Formula body = random_closed_formula(rng, budget - 1, bound, consts);
      return rng() % 2 ? Formula::exists(v, std::move(body))
                       : Formula::forall(v, std::move(body));
    }
  }
}

// Random model over {p/1, q/2} with the given domain size.
inline Model random_model(std::mt19937& rng, int size) {
  Model m;
  for (int i = 1; i <= size; ++i) m.domain.push_back("e" + std::to_string(i));
  Model::PredInterp p;
  p.arity = 1;
  for (const std::string& e : m.domain) {
    if (rng() % 2) p.tuples.insert({e});
  }
  Model::PredInterp q;
  q.arity = 2;
  for (const std::string& a : m.domain) {
    for (const std::string& b : m.domain) {
      if (rng() % 2) q.tuples.insert({a, b});
    }
  }
  m.preds["p"] = std::move(p);
  m.preds["q"] = std::move(q);
  return m;
}

// Alternative truth definition used as a cross-check: quantifiers are
// expanded by substituting each domain entity as a constant. Only valid on
// closed formulas over name-identical constants.
inline bool eval_by_grounding(const Model& m, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Truth:
      return true;
    case Formula::Kind::Falsity:
      return false;
    case Formula::Kind::Pred:
      return eval(m, {}, f);
    case Formula::Kind::Not:
      return !eval_by_grounding(m, f.body());
    case Formula::Kind::And:
      return eval_by_grounding(m, f.lhs()) && eval_by_grounding(m, f.rhs());
    case Formula::Kind::Or:
      return eval_by_grounding(m, f.lhs()) || eval_by_grounding(m, f.rhs());
    case Formula::Kind::Implies:
      return !eval_by_grounding(m, f.lhs()) || eval_by_grounding(m, f.rhs());
    case Formula::Kind::Exists: {
      for (const std::string& e : m.domain) {
        if (eval_by_grounding(m, substitute(f.body(), f.bound_var(), Term::constant(e)))) {
          return true;
        }
      }
      return false;
    }
    case Formula::Kind::Forall: {
      for (const std::string& e : m.domain) {
        if (!eval_by_grounding(m, substitute(f.body(), f.bound_var(), Term::constant(e)))) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

inline std::vector<std::string> op_names(const Trace& trace) {
  std::vector<std::string> out;
  for (const TraceEntry& e : trace) out.push_back(e.op);
  return out;
}

}  // namespace prag::test

#endif  // PRAG_TEST_UTIL_HPP
