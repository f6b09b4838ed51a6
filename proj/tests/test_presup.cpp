#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prag/models.hpp"
#include "prag/presup.hpp"
#include "test_util.hpp"

using namespace prag;
using test::run_text;

namespace {

int accommodation_count(const Trace& trace) {
  int count = 0;
  for (const TraceEntry& e : trace) {
    if (e.op == "presuppose" && e.result.rfind("accommodated", 0) == 0) ++count;
  }
  return count;
}

bool has_bound(const Trace& trace) {
  for (const TraceEntry& e : trace) {
    if (e.op == "presuppose" && e.result.rfind("bound", 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("definite binds to an existing referent, no extra quantifier") {
  Lexicon lex = test::fragment_lexicon();
  DiscourseResult r = run_text("a man owns a donkey . the donkey brays .", lex);
  CHECK(has_bound(r.trace));
  CHECK(accommodation_count(r.trace) == 0);
  Formula target =
      parse_formula("exists x. exists y. (man(x) & donkey(y) & owns(x,y) & brays(y))");
  CHECK(equivalent_up_to(r.formula, target,
                         test::sig({{"man", 1}, {"donkey", 1}, {"owns", 2}, {"brays", 1}}), 2)
            .equivalent);
}

TEST_CASE("global accommodation of an unsatisfied definite") {
  Lexicon lex = test::kof_lexicon();
  DiscourseResult r = run_text("the kof isbald .", lex, Policy::Global);
  Formula target = parse_formula("exists x. (kof(x) & bald(x))");
  CHECK(equivalent_up_to(r.formula, target, test::sig({{"kof", 1}, {"bald", 1}}), 3).equivalent);
  REQUIRE(r.context.referents.size() == 1);
  CHECK(r.context.referents[0].head == "kof");
  REQUIRE(r.context.accommodated.size() == 1);
  CHECK(pretty(r.context.accommodated[0].condition) == "kof(x1)");
  CHECK(r.context.accommodated[0].level == 0);
}

TEST_CASE("policy off raises presupposition failure") {
  Lexicon lex = test::kof_lexicon();
  try {
    run_text("the kof isbald .", lex, Policy::Off);
    FAIL("expected PresuppositionFailureError");
  } catch (const PresuppositionFailureError& e) {
    CHECK(e.source() == "the kof");
    CHECK(e.descriptor() == "kof(_)");
    CHECK(std::string(e.what()) ==
          "presupposition failure: \"the kof\" requires kof(_)");
  }
}

TEST_CASE("trap_scope") {
  std::vector<ScopeFrame> stack;
  stack.push_back(ScopeFrame{});  // Top
  stack.push_back(
      ScopeFrame{ScopeFrame::Kind::Universal, Term::var("x"), {}, {}, false});
  CHECK(trap_scope({}, stack) == 0);
  CHECK(trap_scope({"x"}, stack) == 1);

  stack.push_back(
      ScopeFrame{ScopeFrame::Kind::Universal, Term::var("y"), {}, {}, false});
  CHECK(trap_scope({"x", "y"}, stack) == 2);
  CHECK(trap_scope({"x"}, stack) == 1);

  // Local introductions bind too.
  std::vector<ScopeFrame> neg;
  neg.push_back(ScopeFrame{});
  neg.push_back(ScopeFrame{ScopeFrame::Kind::Negation, std::nullopt, {"x7"}, {}, false});
  CHECK(trap_scope({"x7"}, neg) == 1);
  CHECK(trap_scope({"x1"}, neg) == 0);
}

TEST_CASE("accommodate records referent and condition at the frame") {
  Context ctx;
  Presupposition p;
  p.descriptor = PresupPattern{"kof", {std::nullopt}};
  p.features = {{"gender", "n"}};
  p.source = "the kof";
  Term t = accommodate(ctx, 0, p);
  CHECK(t == Term::var("x1"));
  REQUIRE(ctx.referents.size() == 1);
  CHECK(ctx.referents[0].head == "kof");
  REQUIRE(ctx.accommodated.size() == 1);
  CHECK(ctx.accommodated[0].level == 0);
  CHECK(pretty(ctx.accommodated[0].condition) == "kof(x1)");
}

TEST_CASE("trapped accommodation for a quantified possessive") {
  Lexicon lex = test::fragment_lexicon();
  DiscourseResult r = run_text("every man loves his wife .", lex, Policy::Trapped);
  Formula target = parse_formula("forall x. (man(x) -> exists y. (wife(y,x) & loves(x,y)))");
  CHECK(equivalent_up_to(r.formula, target,
                         test::sig({{"man", 1}, {"wife", 2}, {"loves", 2}}), 2)
            .equivalent);
  CHECK(free_vars(r.formula).empty());
  // Nothing leaks into the top-level context.
  CHECK(r.context.referents.empty());
  CHECK(r.context.accommodated.empty());
}

TEST_CASE("possessive with a constant possessor accommodates globally") {
  Lexicon lex = test::fragment_lexicon();
  DiscourseResult r = run_text("john loves his wife .", lex, Policy::Global);
  Formula target = parse_formula("exists y. (wife(y,john) & loves(john,y))");
  CHECK(equivalent_up_to(r.formula, target, test::sig({{"wife", 2}, {"loves", 2}}), 2)
            .equivalent);
  // wife referent is a full citizen for later anaphora.
  DiscourseResult more = run_text("john loves his wife . she whistles .", lex, Policy::Global);
  Formula target2 =
      parse_formula("exists y. (wife(y,john) & loves(john,y) & whistles(y))");
  CHECK(equivalent_up_to(more.formula, target2,
                         test::sig({{"wife", 2}, {"loves", 2}, {"whistles", 1}}), 2)
            .equivalent);
}

TEST_CASE("two successive definites: one accommodation, then binding") {
  Lexicon lex = test::fragment_lexicon();
  DiscourseResult r = run_text("the donkey brays . the donkey walks .", lex, Policy::Global);
  CHECK(accommodation_count(r.trace) == 1);
  CHECK(has_bound(r.trace));
  Formula target = parse_formula("exists x. (donkey(x) & brays(x) & walks(x))");
  CHECK(equivalent_up_to(r.formula, target,
                         test::sig({{"donkey", 1}, {"brays", 1}, {"walks", 1}}), 2)
            .equivalent);
}

TEST_CASE("binding preference: accessible referent wins over accommodation") {
  Lexicon lex = test::fragment_lexicon();
  DiscourseResult r = run_text("a donkey brays . the donkey walks .", lex, Policy::Global);
  CHECK(has_bound(r.trace));
  CHECK(accommodation_count(r.trace) == 0);
}

TEST_CASE("policy monotonicity") {
  Lexicon lex = test::fragment_lexicon();
  const char* discourses[] = {
      "a man walks . he whistles .",
      "a man owns a donkey . the donkey brays .",
      "every farmer who owns a donkey beats it .",
      "john walks .",
      "a man doesnt walk .",
  };
  for (const char* text : discourses) {
    DiscourseResult off = run_text(text, lex, Policy::Off);
    DiscourseResult global = run_text(text, lex, Policy::Global);
    DiscourseResult trapped = run_text(text, lex, Policy::Trapped);
    CHECK(alpha_eq(off.formula, global.formula));
    CHECK(alpha_eq(off.formula, trapped.formula));
  }
}

TEST_CASE("failure surfaces from deep embedding under policy off") {
  Lexicon lex = test::fragment_lexicon();
  // Definite inside a relative clause inside a universal.
  try {
    run_text("every man who owns the donkey walks .", lex, Policy::Off);
    FAIL("expected PresuppositionFailureError");
  } catch (const PresuppositionFailureError& e) {
    CHECK(e.source() == "the donkey");
    CHECK(e.has_trace());
  }
  // Possessive under negation under a universal.
  CHECK_THROWS_AS(run_text("every man doesnt loves his wife .", lex, Policy::Off),
                  PresuppositionFailureError);
}

TEST_CASE("trapping soundness across embeddings") {
  Lexicon lex = test::fragment_lexicon();
  for (const char* text : {
           "every man loves his wife .",
           "every man who loves his wife whistles .",
           "every man doesnt loves his wife .",
           "john doesnt loves his wife .",
           "every farmer beats the donkey .",
       }) {
    for (Policy policy : {Policy::Global, Policy::Trapped}) {
      DiscourseResult r = run_text(text, lex, policy);
      CHECK(free_vars(r.formula).empty());
      // No accommodated condition at top level may mention a variable that is
      // not a top-level referent.
      for (const AccommodatedCondition& c : r.context.accommodated) {
        for (const std::string& v : free_vars(c.condition)) {
          bool found = false;
          for (const Referent& ref : r.context.referents) {
            if (ref.term.is_var() && ref.term.name() == v) found = true;
          }
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("restrictor-phase possessive is trapped into the restrictor") {
  Lexicon lex = test::fragment_lexicon();
  DiscourseResult r = run_text("every man who loves his wife whistles .", lex, Policy::Trapped);
  // forall x. forall y. ((wife(y,x) & man(x) & loves(x,y)) -> whistles(x))
  Formula target = parse_formula(
      "forall x. forall y. ((wife(y,x) & man(x) & loves(x,y)) -> whistles(x))");
  CHECK(equivalent_up_to(r.formula, target,
                         test::sig({{"man", 1}, {"wife", 2}, {"loves", 2}, {"whistles", 1}}), 2)
            .equivalent);
  CHECK(free_vars(r.formula).empty());
}

TEST_CASE("presupposition under negation accommodates into the barrier body when trapped") {
  Lexicon lex = test::fragment_lexicon();
  // The possessor is the negation-local farmer, so the wife cannot escape.
  DiscourseResult r =
      run_text("a man doesnt beats a farmer who loves his wife .", lex, Policy::Trapped);
  CHECK(free_vars(r.formula).empty());
  DiscourseResult global = run_text("a man doesnt beats a farmer who loves his wife .", lex,
                                    Policy::Global);
  CHECK(alpha_eq(r.formula, global.formula));
}
