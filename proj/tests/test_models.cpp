#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prag/errors.hpp"
#include "prag/models.hpp"
#include "test_util.hpp"

using namespace prag;

TEST_CASE("eval basics") {
  Model m = parse_model("domain: a\nman: a\n");
  CHECK(eval(m, {}, Formula::pred("man", {Term::constant("a")})));

  Model empty_p = parse_model("domain: a\nP: -\n");
  CHECK_FALSE(eval(empty_p, {}, Formula::forall("x", Formula::pred("P", {Term::var("x")}))));
  CHECK_FALSE(eval(empty_p, {}, Formula::exists("x", Formula::pred("P", {Term::var("x")}))));
}

TEST_CASE("eval donkey formula on a concrete model") {
  Formula donkey = parse_formula(
      "forall x. forall y. ((farmer(x) & donkey(y) & owns(x,y)) -> beats(x,y))");
  Model m = parse_model("domain: a b\nfarmer: a\ndonkey: b\nowns: a,b\nbeats: a,b\n");
  CHECK(eval(m, {}, donkey));
  Model m2 = parse_model("domain: a b\nfarmer: a\ndonkey: b\nowns: a,b\nbeats: -\n");
  CHECK_FALSE(eval(m2, {}, donkey));
}

TEST_CASE("eval error cases") {
  Model m = parse_model("domain: a\nman: a\n");
  CHECK_THROWS_AS(eval(m, {}, Formula::pred("man", {Term::var("x")})), EvalError);
  CHECK_THROWS_AS(eval(m, {}, Formula::pred("walks", {Term::constant("a")})), EvalError);
  CHECK_THROWS_AS(eval(m, {}, Formula::pred("man", {Term::constant("a"), Term::constant("a")})),
                  EvalError);
  CHECK_THROWS_AS(eval(m, {}, Formula::pred("man", {Term::constant("zz")})), EvalError);
  CHECK(eval(m, {{"x", "a"}}, Formula::pred("man", {Term::var("x")})));
}

TEST_CASE("parse_model format") {
  Model m = parse_model("domain: a b\nman: a\nowns: a,b\n");
  CHECK(m.domain == std::vector<std::string>{"a", "b"});
  CHECK(m.preds.at("man").arity == 1);
  CHECK(m.preds.at("man").tuples == std::set<std::vector<std::string>>{{"a"}});
  CHECK(m.preds.at("owns").arity == 2);
  CHECK(m.preds.at("owns").tuples == std::set<std::vector<std::string>>{{"a", "b"}});

  Model commented = parse_model("# header\ndomain: a # trailing\nman: -\n\n");
  CHECK(commented.preds.at("man").tuples.empty());

  CHECK_THROWS_AS(parse_model("domain:\n"), ModelError);
  CHECK_THROWS_AS(parse_model("domain: a\nman: b\n"), ModelError);
  CHECK_THROWS_AS(parse_model("domain: a\nman: a\nman: a\n"), ModelError);
  CHECK_THROWS_AS(parse_model("man: a\n"), ModelError);
  CHECK_THROWS_AS(parse_model("domain: a a\n"), ModelError);
  CHECK_THROWS_AS(parse_model("domain: a\nowns: a a,a\n"), ModelError);
}

TEST_CASE("model pretty round-trips through parse_model") {
  Model m = parse_model("domain: a b\nman: a\nowns: a,b b,b\nempty: -\n");
  Model back = parse_model(pretty(m));
  CHECK(back.domain == m.domain);
  CHECK(back.preds.at("owns").tuples == m.preds.at("owns").tuples);
  CHECK(back.preds.at("empty").tuples.empty());
}

TEST_CASE("equivalent_up_to agreements") {
  Formula a = parse_formula("exists x. (man(x) & walks(x))");
  Formula b = parse_formula("exists x. (walks(x) & man(x))");
  Signature s = test::sig({{"man", 1}, {"walks", 1}});
  CHECK(equivalent_up_to(a, b, s, 3).equivalent);
  CHECK(equivalent_up_to(a, a, s, 3).equivalent);
}

TEST_CASE("equivalent_up_to countermodel is the first disagreement") {
  Formula f = parse_formula("exists x. man(x) & exists x. walks(x)");
  Formula g = parse_formula("exists x. (man(x) & walks(x))");
  Signature s = test::sig({{"man", 1}, {"walks", 1}});
  EquivalenceResult r = equivalent_up_to(f, g, s, 2);
  REQUIRE_FALSE(r.equivalent);
  REQUIRE(r.countermodel.has_value());
  const Model& m = *r.countermodel;
  CHECK(m.domain == std::vector<std::string>{"e1", "e2"});
  CHECK(m.preds.at("man").tuples == std::set<std::vector<std::string>>{{"e1"}});
  CHECK(m.preds.at("walks").tuples == std::set<std::vector<std::string>>{{"e2"}});
  CHECK(eval(m, {}, f) != eval(m, {}, g));
}

TEST_CASE("equivalent_up_to pins constants") {
  Formula f = parse_formula("walks(john)");
  Formula g = parse_formula("exists x. walks(x)");
  Signature s = test::sig({{"walks", 1}});
  // Not equivalent: someone may walk while john does not.
  CHECK_FALSE(equivalent_up_to(f, g, s, 2).equivalent);
  CHECK(equivalent_up_to(f, f, s, 2).equivalent);
  // f implies g for every pinning.
  Formula imp = parse_formula("walks(john) -> exists x. walks(x)");
  CHECK(equivalent_up_to(imp, parse_formula("true"), s, 3).equivalent);
}

TEST_CASE("equivalent_up_to rejects bad inputs") {
  Signature s = test::sig({{"man", 1}});
  CHECK_THROWS_AS(equivalent_up_to(parse_formula("man(y)"), parse_formula("true"), s, 2),
                  EvalError);
  CHECK_THROWS_AS(
      equivalent_up_to(parse_formula("walks(john)"), parse_formula("true"), s, 2), EvalError);
}

TEST_CASE("enumeration count matches the closed form") {
  SUBCASE("one unary predicate") {
    Signature s = test::sig({{"p", 1}});
    for (int n = 1; n <= 3; ++n) {
      std::uint64_t visited = enumerate_models(s, {}, n, [](const Model&) { return true; });
      CHECK(visited == count_models(s, n));
    }
    CHECK(count_models(s, 2) == 4);
  }
  SUBCASE("unary and binary") {
    Signature s = test::sig({{"p", 1}, {"q", 2}});
    CHECK(count_models(s, 2) == 64);  // 2^2 * 2^4
    std::uint64_t visited = enumerate_models(s, {}, 2, [](const Model&) { return true; });
    CHECK(visited == 64);
  }
  SUBCASE("with constants") {
    Signature s = test::sig({{"p", 1}});
    std::uint64_t visited =
        enumerate_models(s, {"john"}, 2, [](const Model&) { return true; });
    CHECK(visited == count_models(s, 2, 1));
    CHECK(visited == 8);  // 2 pins * 4 extensions
  }
  SUBCASE("donkey signature at size 2 is 4096 models") {
    Signature s = test::sig({{"farmer", 1}, {"donkey", 1}, {"owns", 2}, {"beats", 2}});
    CHECK(count_models(s, 2) == 4096);
  }
}

TEST_CASE("eval agrees with the grounding evaluator on random pairs") {
  std::mt19937 rng(5150);
  for (int i = 0; i < 1000; ++i) {
    Model m = test::random_model(rng, 1 + static_cast<int>(rng() % 3));
    Formula f = test::random_closed_formula(rng, 3, {}, m.domain);
    CHECK(eval(m, {}, f) == test::eval_by_grounding(m, f));
  }
}

TEST_CASE("equivalence oracle spot-check by sampling") {
  // If equivalent_up_to says yes at size 3, sampled random models of size <= 3
  // must agree.
  Formula a = parse_formula("~(p(c) & q(c,c))");
  Formula b = parse_formula("~p(c) | ~q(c,c)");
  Signature s = test::sig({{"p", 1}, {"q", 2}});
  REQUIRE(equivalent_up_to(a, b, s, 2).equivalent);
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Model m = test::random_model(rng, 1 + static_cast<int>(rng() % 2));
    m.consts["c"] = m.domain[rng() % m.domain.size()];
    CHECK(eval(m, {}, a) == eval(m, {}, b));
  }
}
