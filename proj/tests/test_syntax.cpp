#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "inqkh/syntax.hpp"
#include "oracle.hpp"

using namespace inqkh;

TEST_CASE("basic grammar cases") {
  auto f = parse("p -> bot");
  CHECK(f->kind == Kind::Implies);
  CHECK(f->args[0]->kind == Kind::Atom);
  CHECK(f->args[1]->kind == Kind::Bottom);

  auto g = parse("Kh (p (+) ~p)");
  CHECK(g->kind == Kind::Kh);
  CHECK(g->args[0]->kind == Kind::Tensor);
  CHECK(g->args[0]->tensorK == 1);
  CHECK(g->args[0]->tensorN == 2);
  CHECK(equal(g->args[0]->args[1], implies(atom("p"), bottom())));

  auto t = parse("tensor[2,3](p,q,r)");
  CHECK(t->tensorK == 2);
  CHECK(t->tensorN == 3);
  CHECK(t->args.size() == 3);
  CHECK_THROWS_AS(parse("tensor[4,3](p,q,r)"), ParseError);
  CHECK_THROWS_AS(parse("tensor[1,3](p,q)"), ParseError);
  CHECK_THROWS_AS(parse("tensor[0,2](p,q)"), ParseError);
}

TEST_CASE("sugar laws") {
  CHECK(equal(parse("~a"), parse("a -> bot")));
  CHECK(equal(parse("top"), parse("bot -> bot")));
  CHECK(equal(parse("a (+) b"), parse("tensor[1,2](a,b)")));
  CHECK(equal(parse("=(p,q)"), parse("(p | ~p) -> (q | ~q)")));
  CHECK(equal(parse("exists p. a"), parse("~forall p. ~a")));
  CHECK(equal(parse("<a> b"), parse("~[a]~b")));
  CHECK(equal(parse("a <-> b"), parse("(a -> b) & (b -> a)")));
  // box a = forall r. [r] a over a fresh r
  CHECK(equal(parse("box a"), parse("forall _q0. [_q0] a")));
  CHECK(equal(parse("box (_q0 & a)"), parse("forall _q1. [_q1] (_q0 & a)")));
}

TEST_CASE("unicode aliases") {
  CHECK(equal(parse("⊥"), bottom()));
  CHECK(equal(parse("⊤"), top()));
  CHECK(equal(parse("¬p"), neg(atom("p"))));
  CHECK(equal(parse("p ∧ q"), parse("p & q")));
  CHECK(equal(parse("p ∨ q"), parse("p | q")));
  CHECK(equal(parse("p ⊗ q"), parse("p (+) q")));
  CHECK(equal(parse("p → q"), parse("p -> q")));
  CHECK(equal(parse("p ↔ q"), parse("p <-> q")));
  CHECK(equal(parse("∀p. q"), parse("forall p. q")));
  CHECK(equal(parse("∃p. q"), parse("exists p. q")));
}

TEST_CASE("precedence") {
  CHECK(equal(parse("~p & q"), conj(neg(atom("p")), atom("q"))));
  CHECK(equal(parse("p & q | r"), disj(conj(atom("p"), atom("q")), atom("r"))));
  CHECK(equal(parse("p | q -> r"), implies(disj(atom("p"), atom("q")), atom("r"))));
  CHECK(equal(parse("p -> q -> r"), implies(atom("p"), implies(atom("q"), atom("r")))));
  CHECK(equal(parse("K p & q"), conj(know(atom("p")), atom("q"))));
  CHECK(equal(parse("forall p. p & q"), forall("p", conj(atom("p"), atom("q")))));
  CHECK(equal(parse("[p] q & r"), conj(announce(atom("p"), atom("q")), atom("r"))));
  // | and (+) may not mix without parentheses
  CHECK_THROWS_AS(parse("p | q (+) r"), ParseError);
  CHECK_THROWS_AS(parse("p (+) q | r"), ParseError);
  CHECK(equal(parse("(p | q) (+) r"), tensor(1, 2, {disj(atom("p"), atom("q")), atom("r")})));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("p & & q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse("Kh (K p)"), ParseError);
}

TEST_CASE("Kh body must be propositional") {
  CHECK_THROWS_AS(knowHow(know(atom("p"))), StructureError);
  CHECK_NOTHROW(knowHow(parse("p (+) ~p")));
}

TEST_CASE("free atoms") {
  CHECK(freeAtoms(parse("forall p. p & q")) == std::set<std::string>{"q"});
  CHECK(freeAtoms(parse("Kh (p (+) q)")) == std::set<std::string>{"p", "q"});
  CHECK(freeAtoms(parse("[p] K q")) == std::set<std::string>{"p", "q"});
  CHECK(freeAtoms(parse("forall p. forall q. p | q | r")) == std::set<std::string>{"r"});
  CHECK(allAtoms(parse("forall p. q")) == std::set<std::string>{"p", "q"});
  CHECK(occursFree(parse("forall p. q"), "q"));
  CHECK_FALSE(occursFree(parse("forall p. p"), "p"));
}

TEST_CASE("substitution") {
  CHECK(equal(substitute(parse("K q"), "q", parse("p | r")), parse("K (p | r)")));
  CHECK_THROWS_AS(substitute(parse("forall p. q"), "q", atom("p")), StructureError);
  CHECK_THROWS_AS(substitute(parse("Kh q"), "q", parse("K p")), StructureError);
  // identity when the atom is not free
  auto f = parse("forall p. p & q");
  CHECK(equal(substitute(f, "p", atom("r")), f));
  CHECK(equal(substitute(parse("forall p. q"), "q", atom("r")), parse("forall p. r")));
}

TEST_CASE("fresh atoms") {
  CHECK(freshAtom({}) == "_q0");
  CHECK(freshAtom({"_q0"}) == "_q1");
  CHECK(freshAtom({"p", "q"}) == "_q0");
  CHECK(freshAtom({"_q0", "_q1", "_q2"}) == "_q3");
}

TEST_CASE("render round trip on a generated corpus") {
  oracle::Gen gen(20240817, {"p", "q"}, true);
  for (int i = 0; i < 2000; ++i) {
    auto f = gen.modal(3);
    CAPTURE(render(f));
    CHECK(equal(parse(render(f)), f));
    CHECK(equal(parse(render(f, {true})), f));
  }
}

TEST_CASE("render examples") {
  CHECK(render(parse("p -> bot")) == "p -> bot");
  CHECK(render(parse("p -> bot"), {true}) == "~p");
  CHECK(render(parse("p (+) q")) == "p (+) q");
  CHECK(render(parse("forall p. K p")) == "forall p. K p");
  CHECK(render(parse("p & q & r")) == "p & q & r");
  CHECK(render(parse("(p | q) (+) r")) == "(p | q) (+) r");
}

TEST_CASE("tree addressing") {
  auto f = parse("p & (q | r)");
  CHECK(equal(subterm(f, {1, 0}), atom("q")));
  CHECK(equal(replaceAt(f, {1, 0}, bottom()), parse("p & (bot | r)")));
  CHECK_THROWS_AS(subterm(f, {5}), DomainError);
}
