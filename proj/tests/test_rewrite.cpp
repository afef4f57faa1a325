#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "inqkh/rewrite.hpp"
#include "inqkh/satisfaction.hpp"
#include "inqkh/support.hpp"
#include "oracle.hpp"

using namespace inqkh;

TEST_CASE("announcement rank") {
  CHECK(announcementRank(parse("p")) == 0);
  CHECK(announcementRank(parse("K (p -> q) & forall r. r")) == 0);
  CHECK(announcementRank(parse("[p] q")) == 1);
  CHECK(announcementRank(parse("[[p]q] r")) == 2);
  CHECK(announcementRank(parse("[p] [q] r")) == 2);
  CHECK(announcementRank(parse("[p]q & [[p]q]r")) == 2);  // binary nodes take the max
  CHECK(announcementRank(parse("K [p] q")) == 1);
  CHECK_THROWS_AS(announcementRank(parse("Kh p")), DomainError);
}

TEST_CASE("Kh elimination examples") {
  CHECK(equal(eliminateKh(parse("Kh p")), parse("K p")));
  CHECK(equal(eliminateKh(parse("Kh bot")), bottom()));
  CHECK(equal(eliminateKh(parse("Kh (p | q)")), parse("K p | K q")));
  CHECK(equal(eliminateKh(parse("Kh (p & q)")), parse("K p & K q")));
  CHECK(equal(eliminateKh(parse("Kh (p (+) q)")),
              parse("exists _q0. K ([_q0] K p & [~_q0] K q)")));
  CHECK(equal(eliminateKh(parse("Kh (p -> q)")),
              parse("K forall _q0. [_q0] (K p -> K q)")));
  // untouched when no Kh occurs
  auto f = parse("[p] K (q | r)");
  CHECK(equal(eliminateKh(f), f));
}

TEST_CASE("Kh elimination is Kh-free and traced") {
  oracle::Gen gen(801, {"p", "q"}, true);
  for (int i = 0; i < 150; ++i) {
    auto f = gen.modal(3);
    RewriteTrace tr;
    auto g = eliminateKh(f, &tr);
    CAPTURE(render(f));
    CHECK_FALSE(containsKind(g, Kind::Kh));
    if (!tr.empty()) {
      CHECK(equal(tr.front().before, f));
      CHECK(equal(tr.back().after, g));
      for (std::size_t j = 1; j < tr.size(); ++j)
        CHECK(equal(tr[j - 1].after, tr[j].before));
    } else {
      CHECK(equal(g, f));
    }
  }
}

TEST_CASE("announcement elimination examples") {
  CHECK(equal(eliminateAnnouncements(parse("[p] q")), parse("p -> q")));
  CHECK(equal(eliminateAnnouncements(parse("[p] K q")), parse("p -> K (p -> q)")));
  CHECK(equal(eliminateAnnouncements(parse("[p] (q & r)")),
              parse("(p -> q) & (p -> r)")));
  // binder collision: rename first, then push the announcement through
  CHECK(equal(eliminateAnnouncements(parse("[p] forall p. q")),
              parse("forall _q0. (p -> q)")));
  // binary connectives distribute directly; wider tensors go through their
  // truth expansion first
  CHECK(equal(eliminateAnnouncements(parse("[p] (q (+) r)")),
              parse("(p -> q) (+) (p -> r)")));
  CHECK(equal(eliminateAnnouncements(parse("[p] tensor[2,3](q,r,s)")),
              eliminateAnnouncements(announce(atom("p"), rdTensorExpansion(
                  2, 3, {atom("q"), atom("r"), atom("s")})))));
}

TEST_CASE("every eliminated redex drops from rank one to zero") {
  oracle::Gen gen(802, {"p", "q"}, true);
  int steps = 0;
  for (int i = 0; i < 150; ++i) {
    auto f = eliminateKh(gen.modal(3));
    RewriteTrace micro, macro;
    auto g = eliminateAnnouncements(f, &micro, &macro);
    CAPTURE(render(f));
    CHECK_FALSE(containsKind(g, Kind::Announce));
    for (const auto& st : macro) {
      CHECK(announcementRank(st.lhs) == 1);
      CHECK(announcementRank(st.rhs) == 0);
    }
    for (std::size_t j = 1; j < macro.size(); ++j)
      CHECK(equal(macro[j - 1].after, macro[j].before));
    if (!macro.empty()) CHECK(equal(macro.back().after, g));
    steps += static_cast<int>(macro.size());
  }
  CHECK(steps > 50);
}

TEST_CASE("classical translation preserves global truth") {
  Model m = canonicalModel({"p", "q"});
  std::vector<Model> models = {m, restrict(m, {0, 2}), restrict(m, {1, 3}),
                               restrict(m, {0, 3}), restrict(m, {2})};
  oracle::Gen gen(803, {"p", "q"}, true);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    auto f = gen.modal(2);
    auto g = toClassicalEpistemic(f);
    CAPTURE(render(f));
    CHECK_FALSE(containsKind(g, Kind::Kh));
    CHECK_FALSE(containsKind(g, Kind::Announce));
    try {
      for (const auto& mm : models)
        CHECK(holdsGlobally(mm, f) == holdsGlobally(mm, g));
      ++checked;
    } catch (const BudgetError&) {
      // deeply nested quantifier stacks may blow the override budget; skip
    }
  }
  CHECK(checked >= 40);
  CHECK(equal(toClassicalEpistemic(parse("K p")), parse("K p")));
}

TEST_CASE("realizations and normal form") {
  auto texts = [](const std::vector<FormulaPtr>& v) {
    std::vector<std::string> out;
    for (const auto& f : v) out.push_back(render(f));
    return out;
  };
  CHECK(texts(realizations(parse("p"))) == std::vector<std::string>{"p"});
  CHECK(texts(realizations(parse("p | q"))) == std::vector<std::string>{"p", "q"});
  CHECK(texts(realizations(parse("p -> (q | r)"))) ==
        std::vector<std::string>{"p -> q", "p -> r"});
  CHECK(realizations(parse("(p | q) -> (q | r)")).size() == 4);
  CHECK(equal(normalForm(parse("p | q")), parse("p | q")));
  CHECK(equal(normalForm(parse("p -> (q | r)")), parse("(p -> q) | (p -> r)")));
  CHECK_THROWS_AS(realizations(parse("(p|q)->((p|q)->((p|q)->(p|q)))"), 4), BudgetError);
}

TEST_CASE("normal form is support-equivalent") {
  Model m = canonicalModel({"p", "q", "r"});
  oracle::Gen gen(804, {"p", "q", "r"}, true);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    auto f = gen.prop(3);
    CAPTURE(render(f));
    try {
      auto nf = normalForm(f, 3000);
      CHECK(relativizedEquivalent(m, m.fullState(), f, nf));
      ++checked;
    } catch (const BudgetError&) {
    }
  }
  CHECK(checked >= 60);
}

TEST_CASE("tensor simplification") {
  CHECK(equal(simplifyGeneralTensor(parse("tensor[3,3](p,q,r)")), parse("p & (q & r)")));
  CHECK(equal(simplifyGeneralTensor(parse("tensor[2,3](p,q,top)")), parse("p (+) q")));
  // dropping the bot leaves a full-threshold tensor, which reduces further
  CHECK(equal(simplifyGeneralTensor(parse("tensor[2,3](p,q,bot)")), parse("p & q")));
  CHECK(equal(simplifyGeneralTensor(parse("tensor[1,3](p,q,r)")), parse("(p (+) q) (+) r")));
  CHECK(equal(simplifyGeneralTensor(parse("tensor[1,4](p,q,r,s)")),
              parse("((p (+) q) (+) r) (+) s")));
  // inner occurrences are reduced first and the result re-examined
  CHECK(equal(simplifyGeneralTensor(parse("tensor[2,2](tensor[3,3](p,q,r), s)")),
              parse("(p & (q & r)) & s")));
  // fixpoint: the output admits no further law applications
  auto f = parse("tensor[2,3](p,q,r)");
  CHECK(equal(simplifyGeneralTensor(f), f));

  Model m = canonicalModel({"p", "q", "r"});
  oracle::Gen gen(805, {"p", "q", "r"}, true);
  for (int i = 0; i < 150; ++i) {
    auto g = gen.prop(3);
    CAPTURE(render(g));
    CHECK(relativizedEquivalent(m, m.fullState(), g, simplifyGeneralTensor(g)));
  }
}
