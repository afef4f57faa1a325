// End-to-end acceptance battery. Takes the golden-proof data directory as
// argv[1]; prints one PASS/FAIL line per criterion and exits nonzero on any
// failure.
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "inqkh/decide.hpp"
#include "inqkh/proofs.hpp"
#include "inqkh/resolution.hpp"
#include "inqkh/rewrite.hpp"
#include "inqkh/satisfaction.hpp"
#include "inqkh/support.hpp"
#include "inqkh/syntax.hpp"
#include "oracle.hpp"

using namespace inqkh;

namespace {

std::string gDataDir;
int gFailures = 0;

#define REQUIRE_OR_FAIL(cond)                                        \
  do {                                                               \
    if (!(cond)) throw std::runtime_error("check failed: " #cond);   \
  } while (0)

void criterion(int n, const std::string& what, const std::function<void()>& body) {
  try {
    body();
    std::cout << "PASS " << n << ": " << what << "\n";
  } catch (const std::exception& e) {
    std::cout << "FAIL " << n << ": " << what << " -- " << e.what() << "\n";
    ++gFailures;
  }
  std::cout.flush();
}

// Deterministic deduplicated propositional corpus over {p, q}.
std::vector<FormulaPtr> propCorpus(unsigned seed, bool withTensors, int depth,
                                   std::size_t target) {
  oracle::Gen gen(seed, {"p", "q"}, withTensors);
  std::vector<FormulaPtr> out;
  std::set<std::string> seen;
  for (std::size_t tries = 0; tries < target * 12 && out.size() < target; ++tries) {
    auto f = gen.prop(depth);
    if (seen.insert(render(f)).second) out.push_back(f);
  }
  return out;
}

std::vector<State> nonEmptySubstates(const Model& m) {
  std::vector<State> out;
  auto n = static_cast<uint32_t>(m.worlds.size());
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    State s;
    for (uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.insert(i);
    out.push_back(s);
  }
  return out;
}

// Every model with <= maxWorlds worlds over the vocabulary, one per multiset
// of valuation classes.
std::vector<Model> smallModels(const std::vector<std::string>& vocab, unsigned maxWorlds) {
  Model canon = canonicalModel(vocab);
  std::vector<Model> out;
  auto classes = static_cast<uint32_t>(canon.worlds.size());
  std::vector<uint32_t> pick;
  std::function<void(uint32_t)> go = [&](uint32_t from) {
    if (!pick.empty()) {
      Model m;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        m.worlds.push_back(canon.worlds[pick[i]] + "#" + std::to_string(i));
        for (const auto& p : vocab)
          if (canon.atomTrueAt(p, pick[i])) m.valuation[p].insert(static_cast<uint32_t>(i));
      }
      out.push_back(std::move(m));
    }
    if (pick.size() == maxWorlds) return;
    for (uint32_t c = from; c < classes; ++c) {
      pick.push_back(c);
      go(c);
      pick.pop_back();
    }
  };
  go(0);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

// --- 1: pointwise truth = nonempty actual-resolution set --------------------
static void c1() {
  Model m = canonicalModel({"p", "q"});
  auto corpus = propCorpus(9001, false, 3, 10000);
  REQUIRE_OR_FAIL(corpus.size() >= 9000);
  for (const auto& f : corpus)
    for (uint32_t w = 0; w < m.worlds.size(); ++w)
      if (satisfies(m, w, f) != !resolutionsAt(m, w, f).empty())
        throw std::runtime_error("bridge broken at " + render(f) + " world " +
                                 m.worlds[w]);
}

// --- 2: uniform resolution presence = full-state support --------------------
static void c2() {
  Model m = canonicalModel({"p", "q"});
  auto states = nonEmptySubstates(m);
  REQUIRE_OR_FAIL(states.size() == 15);
  auto corpus = propCorpus(9002, false, 3, 600);
  for (const auto& f : propCorpus(9003, true, 3, 600)) corpus.push_back(f);
  // make sure every (k, n) signature is represented directly as well
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}}) {
    std::vector<FormulaPtr> args;
    for (int i = 0; i < n; ++i) args.push_back(i % 2 ? atom("q") : atom("p"));
    corpus.push_back(tensor(k, n, args));
    corpus.push_back(tensor(k, n, std::vector<FormulaPtr>(n, parse("p | ~p"))));
  }
  Budget big;
  big.maxSpaceSize = 1'000'000;
  for (const auto& f : corpus)
    for (const auto& s : states) {
      Model sub = restrict(m, s);
      if (uniformResolution(sub, f, big).has_value() !=
          supports(sub, sub.fullState(), f))
        throw std::runtime_error("mismatch at " + render(f));
    }
}

// --- 3: every axiom schema instance survives bounded countermodel search ----
static void c3() {
  oracle::Gen gen(9004, {"p", "q"}, false);
  auto small = [&] { return gen.prop(1); };
  std::vector<std::pair<std::string, FormulaPtr>> instances;
  auto inst = [&](const std::string& name, const FormulaPtr& f) {
    if (!matchesAxiom(name, f))
      throw std::runtime_error("built a non-instance of " + name + ": " + render(f));
    instances.emplace_back(name, f);
  };
  for (int round = 0; round < 2; ++round) {
    auto a = small, b = small;
    FormulaPtr al = gen.prop(1), be = gen.prop(1), phi = gen.modal(1), psi = gen.modal(1);
    FormulaPtr chi = gen.prop(1);
    FormulaPtr pb = round ? bottom() : atom("p");
    inst("Rd⊗", iff(tensor(1, 2, {al, be}), disj(al, be)));
    inst("Rd⊗ᵏₙ", iff(tensor(2, 3, {al, be, chi}), rdTensorExpansion(2, 3, {al, be, chi})));
    inst("DIST_K", implies(know(implies(phi, psi)), implies(know(phi), know(psi))));
    inst("[]p", iff(announce(chi, pb), implies(chi, pb)));
    inst("[]○", iff(announce(chi, conj(phi, psi)),
                    conj(announce(chi, phi), announce(chi, psi))));
    inst("[]○", iff(announce(chi, disj(phi, psi)),
                    disj(announce(chi, phi), announce(chi, psi))));
    inst("[]○", iff(announce(chi, tensor(1, 2, {phi, psi})),
                    tensor(1, 2, {announce(chi, phi), announce(chi, psi)})));
    inst("[]○", iff(announce(chi, implies(phi, psi)),
                    implies(announce(chi, phi), announce(chi, psi))));
    inst("[]K", iff(announce(chi, know(phi)), implies(chi, know(announce(chi, phi)))));
    inst("[]∀", iff(announce(chi, forall("r", phi)), forall("r", announce(chi, phi))));
    inst("DIST∀", implies(forall("r", implies(phi, psi)),
                          implies(forall("r", phi), forall("r", psi))));
    inst("SU", exists("r", conj(atom("r"),
                                forall("s", implies(atom("s"),
                                                    know(implies(atom("r"), atom("s"))))))));
    inst("BC", implies(forall("r", know(phi)), know(forall("r", phi))));
    inst("SUB∀", implies(forall("r", disj(atom("r"), chi)), disj(al, chi)));
    inst("KhK", implies(knowHow(al), know(al)));
    inst("KKhp", implies(know(atom("p")), knowHow(atom("p"))));
    inst("Kh⊥", iff(knowHow(bottom()), bottom()));
    inst("Kh∨", iff(knowHow(disj(al, be)), disj(knowHow(al), knowHow(be))));
    inst("Kh∧", iff(knowHow(conj(al, be)), conj(knowHow(al), knowHow(be))));
    inst("Kh→", iff(knowHow(implies(al, be)), khArrowRhs(al, be, "r")));
    inst("Kh⊗", iff(knowHow(tensor(1, 2, {al, be})), khBinTensorRhs(al, be, "r")));
    inst("Kh⊗ᵏₙ", iff(knowHow(tensor(2, 3, {al, be, chi})),
                      khTensorRhs(2, 3, {al, be, chi}, {"x", "y", "z"})));
    inst("T_K", implies(know(phi), phi));
    inst("4_K", implies(know(phi), know(know(phi))));
    inst("5_K", implies(neg(know(phi)), know(neg(know(phi)))));
    inst("4_Kh", implies(knowHow(al), know(knowHow(al))));
    inst("5_Kh", implies(neg(knowHow(al)), know(neg(knowHow(al)))));
    inst("TAUT", implies(conj(al, be), conj(be, al)));
    (void)a;
    (void)b;
  }
  REQUIRE_OR_FAIL(instances.size() >= 50);
  for (const auto& [name, f] : instances)
    if (!validBounded(f, 3).positive())
      throw std::runtime_error("countermodel for " + name + " instance " + render(f));
}

// --- 4: the classical translation preserves global truth --------------------
static void c4() {
  auto models = smallModels({"p", "q"}, 3);
  REQUIRE_OR_FAIL(models.size() == 34);
  oracle::Gen gen(9005, {"p", "q"}, true);
  EvalLimits lim;
  lim.maxQuantifierBits = 22;
  int checked = 0, skipped = 0;
  while (checked < 200) {
    auto f = gen.modal(2);
    auto g = toClassicalEpistemic(f);
    try {
      for (const auto& m : models)
        if (holdsGlobally(m, f, lim) != holdsGlobally(m, g, lim))
          throw std::runtime_error("not preserved: " + render(f));
      ++checked;
    } catch (const BudgetError&) {
      if (++skipped > 200) throw std::runtime_error("too many budget skips");
    }
  }
}

// --- 5: announcement elimination descends in announcement rank --------------
static void c5() {
  oracle::Gen gen(9006, {"p", "q"}, true);
  int steps = 0;
  for (int i = 0; i < 200; ++i) {
    auto f = eliminateKh(gen.modal(3));
    if (announcementRank(f) > 3) continue;
    RewriteTrace micro, macro;
    auto g = eliminateAnnouncements(f, &micro, &macro);
    REQUIRE_OR_FAIL(!containsKind(g, Kind::Announce));
    for (const auto& st : macro) {
      if (announcementRank(st.lhs) != 1 || announcementRank(st.rhs) != 0)
        throw std::runtime_error("non-descending step on " + render(f));
      if (announcementRank(st.before) < announcementRank(st.after))
        throw std::runtime_error("global rank grew on " + render(f));
    }
    if (!macro.empty()) REQUIRE_OR_FAIL(announcementRank(macro.back().after) == 0);
    steps += static_cast<int>(macro.size());
  }
  REQUIRE_OR_FAIL(steps > 100);
}

// --- 6: normal form is support-equivalent across all 16 canonical states ----
static void c6() {
  Model m = canonicalModel({"p", "q"});
  auto corpus = propCorpus(9007, true, 3, 400);
  int checked = 0;
  for (const auto& f : corpus) {
    try {
      auto nf = normalForm(f, 5000);
      // the full state covers all 2^4 substates
      if (!relativizedEquivalent(m, m.fullState(), f, nf))
        throw std::runtime_error("normal form diverges on " + render(f));
      ++checked;
    } catch (const BudgetError&) {
    }
  }
  REQUIRE_OR_FAIL(checked >= 200);
}

// --- 7: spot validities -----------------------------------------------------
static void c7() {
  REQUIRE_OR_FAIL(validInq(parse("p -> p")).outcome == Verdict::Outcome::Valid);
  REQUIRE_OR_FAIL(validInq(parse("p (+) ~p")).outcome == Verdict::Outcome::Valid);
  auto v = validInq(parse("p | ~p"));
  REQUIRE_OR_FAIL(v.outcome == Verdict::Outcome::CounterexampleState);
  REQUIRE_OR_FAIL(!supports(v.model, v.state, parse("p | ~p")));
  REQUIRE_OR_FAIL(!supports(v.model, v.minimalState, parse("p | ~p")));
  auto b = validBounded(parse("Kh (p | ~p) <-> (K p | K ~p)"), 4);
  REQUIRE_OR_FAIL(b.outcome == Verdict::Outcome::NoCounterexampleUpTo);
  REQUIRE_OR_FAIL(b.bound == 4);
}

// --- 8: the dependence atom is not closed under binary tensor ---------------
static void c8() {
  auto dep = parse("=(p,q)");
  auto v = entailsInq({tensor(1, 2, {dep, dep})}, dep);
  REQUIRE_OR_FAIL(v.outcome == Verdict::Outcome::CounterexampleState);
  REQUIRE_OR_FAIL(v.model.worlds.size() == 4);
  REQUIRE_OR_FAIL(supports(v.model, v.state, tensor(1, 2, {dep, dep})));
  REQUIRE_OR_FAIL(!supports(v.model, v.state, dep));
  REQUIRE_OR_FAIL(supports(v.model, v.minimalState, tensor(1, 2, {dep, dep})));
  REQUIRE_OR_FAIL(!supports(v.model, v.minimalState, dep));
}

// --- 9: the uniform-definability counterexample kernel ----------------------
static void c9() {
  T23Report r = t23Report(2);
  REQUIRE_OR_FAIL(r.model.worlds.size() == 6);
  REQUIRE_OR_FAIL(r.checks.size() == 4);
  REQUIRE_OR_FAIL(r.allInequivalent());
  REQUIRE_OR_FAIL(r.allClassified());
  auto classFormula = [&](const std::string& name) -> FormulaPtr {
    if (name == "bot") return bottom();
    if (name == "psi") return r.psi;
    if (name == "psi(+)psi") return tensor(1, 2, {r.psi, r.psi});
    return top();
  };
  for (const auto& c : r.checks)
    if (supports(r.model, c.witness, r.target) ==
        supports(r.model, c.witness, classFormula(c.className)))
      throw std::runtime_error("witness fails against " + c.className);
  for (const auto& c : r.contexts) {
    auto instf = substitute(c.context, "p0", r.psi);
    if (!relativizedEquivalent(r.model, r.state, instf, classFormula(c.classifiedAs)))
      throw std::runtime_error("misclassified context " + render(c.context));
  }
}

// --- 10: the proof checker --------------------------------------------------
static void c10() {
  auto base = proofFromJson(slurp(gDataDir + "/pre_base.json"));
  auto golden = proofFromJson(slurp(gDataDir + "/exists_pattern.json"));
  REQUIRE_OR_FAIL(checkProof(base).accepted);
  REQUIRE_OR_FAIL(checkProof(golden).accepted);

  // single-line corruption is always caught
  int rejected = 0;
  for (int k = 0; k < 20; ++k) {
    ProofScript bad = golden;
    std::size_t at = (static_cast<std::size_t>(k) * 7 + 3) % bad.lines.size();
    bad.lines[at].formula = conj(bad.lines[at].formula, bottom());
    if (!checkProof(bad).accepted) ++rejected;
  }
  REQUIRE_OR_FAIL(rejected == 20);

  // machine-generated reduction derivations all check
  oracle::Gen gen(9010, {"p", "q"}, true);
  int checked = 0, skips = 0;
  while (checked < 50) {
    auto f = gen.modal(2);
    try {
      auto s = reductionTrace(f);
      auto res = checkProof(s);
      if (!res.accepted)
        throw std::runtime_error("trace for " + render(f) + " rejected at line " +
                                 std::to_string(res.line) + ": " + res.reason);
      REQUIRE_OR_FAIL(equal(s.lines.back().formula, iff(f, toClassicalEpistemic(f))));
      ++checked;
    } catch (const BudgetError&) {
      if (++skips > 100) throw std::runtime_error("too many budget skips");
    }
  }

  // replacement licensed by rRE must not reach under Kh
  ProofScript guard;
  Justification taut;
  taut.tag = Justification::Tag::Axiom;
  taut.axiomName = "TAUT";
  guard.lines.push_back({iff(parse("p | ~p"), parse("p -> p")), taut});
  Justification rre;
  rre.tag = Justification::Tag::RRE;
  rre.i = 1;
  guard.lines.push_back({iff(knowHow(parse("p | ~p")), knowHow(parse("p -> p"))), rre});
  auto res = checkProof(guard);
  REQUIRE_OR_FAIL(!res.accepted);
  REQUIRE_OR_FAIL(res.line == 2);
  REQUIRE_OR_FAIL(!res.structural);
}

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <data-dir>\n";
    return 2;
  }
  gDataDir = argv[1];
  criterion(1, "pointwise truth matches nonempty actual-resolution sets", c1);
  criterion(2, "uniform resolution presence matches full-state support", c2);
  criterion(3, "all axiom schema instances pass bounded countermodel search", c3);
  criterion(4, "classical translation preserves global truth", c4);
  criterion(5, "announcement elimination descends in rank", c5);
  criterion(6, "normal form is support-equivalent", c6);
  criterion(7, "spot validities", c7);
  criterion(8, "dependence atom is not closed under tensor", c8);
  criterion(9, "uniform-definability counterexample kernel", c9);
  criterion(10, "proof checker accepts goldens, rejects corruptions", c10);
  return gFailures == 0 ? 0 : 1;
}
