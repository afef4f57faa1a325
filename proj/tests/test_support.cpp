#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "inqkh/rewrite.hpp"
#include "inqkh/support.hpp"
#include "oracle.hpp"

using namespace inqkh;

TEST_CASE("basic clauses") {
  Model m = canonicalModel({"p", "q"});
  // empty state supports everything, including bot
  CHECK(supports(m, {}, bottom()));
  CHECK(supports(m, {}, parse("p & ~p")));
  // atoms: containment in the truth set
  CHECK(supports(m, {0, 2}, atom("p")));  // worlds: w_pq w_q w_p w_
  CHECK_FALSE(supports(m, {0, 1}, atom("p")));
  // disjunction requires one disjunct supported by the whole state
  CHECK(supports(m, {0}, parse("p | q")));
  CHECK_FALSE(supports(m, {1, 2}, parse("p | q")));
  CHECK(supports(m, {1, 2}, parse("p (+) q")));  // split {1} / {2}
  // implication quantifies over substates
  CHECK(supports(m, m.fullState(), parse("p -> p | q")));
  CHECK_FALSE(supports(m, m.fullState(), parse("p | ~p")));
  CHECK(supports(m, m.fullState(), parse("p (+) ~p")));
  CHECK_THROWS_AS(supports(m, {0}, parse("K p")), StructureError);
}

TEST_CASE("matches the definitional oracle") {
  Model m = canonicalModel({"p", "q"});
  auto states = oracle::subsetsOf(m.fullState());
  // depth 2 on every state (the oracle's tensor clause is exponential in
  // nesting depth, so deeper formulas only get small states below)
  oracle::Gen gen(911, {"p", "q"}, true);
  for (int i = 0; i < 400; ++i) {
    auto f = gen.prop(2);
    CAPTURE(render(f));
    for (const auto& s : states) CHECK(supports(m, s, f) == oracle::supports(m, s, f));
  }
  oracle::Gen deep(914, {"p", "q"}, true);
  for (int i = 0; i < 60; ++i) {
    auto f = deep.prop(3);
    CAPTURE(render(f));
    for (const auto& s : states) {
      if (s.size() > 2) continue;
      CHECK(supports(m, s, f) == oracle::supports(m, s, f));
    }
  }
}

TEST_CASE("support is downward closed") {
  Model m = canonicalModel({"p", "q"});
  oracle::Gen gen(912, {"p", "q"}, true);
  for (int i = 0; i < 300; ++i) {
    auto f = gen.prop(3);
    auto profile = supportProfile(m, m.fullState(), f);
    for (std::size_t mask = 0; mask < profile.size(); ++mask) {
      if (!profile[mask]) continue;
      for (std::size_t sub = mask;; sub = (sub - 1) & mask) {
        CAPTURE(render(f));
        CHECK(profile[sub]);
        if (sub == 0) break;
      }
    }
  }
}

TEST_CASE("profile agrees with pointwise calls") {
  Model m = canonicalModel({"p", "q"});
  State s = {0, 2, 3};
  auto f = parse("(p -> q) (+) (q -> p)");
  auto profile = supportProfile(m, s, f);
  std::vector<uint32_t> ws(s.begin(), s.end());
  REQUIRE(profile.size() == 8);
  for (std::size_t mask = 0; mask < 8; ++mask) {
    State sub;
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (mask & (std::size_t{1} << i)) sub.insert(ws[i]);
    CHECK(profile[mask] == supports(m, sub, f));
  }
}

TEST_CASE("singleton states collapse to classical truth") {
  Model m = canonicalModel({"p", "q"});
  oracle::Gen gen(913, {"p", "q"}, true);
  for (int i = 0; i < 300; ++i) {
    auto f = gen.prop(3);
    for (uint32_t w = 0; w < 4; ++w) {
      CAPTURE(render(f));
      CHECK(supports(m, {w}, f) == oracle::classicalTruth(m, w, f));
    }
  }
}

TEST_CASE("tensor reduction laws hold semantically") {
  Model m = canonicalModel({"p", "q", "r"});
  State full = m.fullState();
  auto p = atom("p"), q = atom("q"), r = atom("r");
  // full-threshold tensor is plain conjunction
  CHECK(relativizedEquivalent(m, full, tensor(3, 3, {p, q, r}),
                              parse("p & q & r")));
  // unary threshold chains through the binary tensor
  CHECK(relativizedEquivalent(m, full, tensor(1, 3, {p, q, r}),
                              tensor(1, 2, {tensor(1, 2, {p, q}), r})));
  // a literal top drops and lowers the threshold
  CHECK(relativizedEquivalent(m, full, tensor(2, 3, {p, q, top()}),
                              tensor(1, 2, {p, q})));
  // a literal bot just drops
  CHECK(relativizedEquivalent(m, full, tensor(2, 3, {p, q, bottom()}),
                              tensor(2, 2, {p, q})));
  // binary tensor differs from inquisitive disjunction
  State w;
  CHECK_FALSE(relativizedEquivalentWitness(m, full, tensor(1, 2, {p, q}),
                                           disj(p, q), w));
  CHECK(supports(m, w, tensor(1, 2, {p, q})) != supports(m, w, disj(p, q)));
  // ... but the truth expansion matches on singletons
  auto rd = rdTensorExpansion(2, 3, {p, q, r});
  for (uint32_t i = 0; i < m.worlds.size(); ++i)
    CHECK(supports(m, {i}, tensor(2, 3, {p, q, r})) == supports(m, {i}, rd));
}

TEST_CASE("state width budget") {
  Model m = canonicalModel({"p", "q", "r"});
  SupportBudget tight{2};
  CHECK_THROWS_AS(supports(m, m.fullState(), parse("p -> q"), tight), BudgetError);
  CHECK_NOTHROW(supports(m, {0, 1}, parse("p -> q"), tight));
  // atoms never enumerate substates
  CHECK_NOTHROW(supports(m, m.fullState(), atom("p"), tight));
}
