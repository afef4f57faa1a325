#include "inqkh/decide.hpp"

#include <algorithm>
#include <functional>

namespace inqkh {

namespace {

std::vector<std::string> sortedAtoms(const FormulaPtr& a) {
  auto s = freeAtoms(a);
  return {s.begin(), s.end()};
}

State shrinkFailing(const Model& m, const State& start,
                    const std::function<bool(const State&)>& stillFails) {
  State cur = start;
  for (uint32_t w : start) {
    if (cur.size() <= 1) break;
    State trial = cur;
    trial.erase(w);
    if (stillFails(trial)) cur = std::move(trial);
  }
  (void)m;
  return cur;
}

}  // namespace

Verdict validInq(const FormulaPtr& a, unsigned vocabCap) {
  if (!isPropositional(a))
    throw StructureError("exact validity covers the propositional fragment only");
  Model m = canonicalModel(sortedAtoms(a), vocabCap);
  State full = m.fullState();
  if (supports(m, full, a)) return {Verdict::Outcome::Valid};
  Verdict v{Verdict::Outcome::CounterexampleState};
  v.model = m;
  v.state = full;
  v.minimalState =
      shrinkFailing(m, full, [&](const State& t) { return !t.empty() && !supports(m, t, a); });
  return v;
}

Verdict entailsInq(const std::vector<FormulaPtr>& gamma, const FormulaPtr& a,
                   unsigned vocabCap) {
  std::set<std::string> vocab = freeAtoms(a);
  for (const auto& g : gamma) {
    if (!isPropositional(g))
      throw StructureError("exact entailment covers the propositional fragment only");
    auto fa = freeAtoms(g);
    vocab.insert(fa.begin(), fa.end());
  }
  if (!isPropositional(a))
    throw StructureError("exact entailment covers the propositional fragment only");
  Model m = canonicalModel({vocab.begin(), vocab.end()}, vocabCap);
  std::size_t n = m.worlds.size();
  auto isCounter = [&](const State& s) {
    if (s.empty()) return false;
    for (const auto& g : gamma)
      if (!supports(m, s, g)) return false;
    return !supports(m, s, a);
  };
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    State s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.insert(static_cast<uint32_t>(i));
    if (isCounter(s)) {
      Verdict v{Verdict::Outcome::CounterexampleState};
      v.model = m;
      v.state = s;
      v.minimalState = shrinkFailing(m, s, isCounter);
      return v;
    }
  }
  return {Verdict::Outcome::Valid};
}

Verdict validBounded(const FormulaPtr& f, unsigned maxWorlds, const EvalLimits& lim) {
  std::vector<std::string> vocab = sortedAtoms(f);
  std::size_t classes = std::size_t{1} << vocab.size();
  // Models are multisets of valuation classes; duplicates matter because the
  // propositional quantifiers can count worlds.
  std::vector<std::size_t> pick;
  std::optional<Verdict> found;
  std::function<void(std::size_t, unsigned)> go = [&](std::size_t from, unsigned left) {
    if (found) return;
    if (!pick.empty()) {
      Model m;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        std::string id = "w" + std::to_string(i) + "_";
        for (std::size_t b = 0; b < vocab.size(); ++b)
          if (pick[i] & (std::size_t{1} << b)) id += vocab[b];
        uint32_t idx = static_cast<uint32_t>(m.worlds.size());
        m.worlds.push_back(id);
        for (std::size_t b = 0; b < vocab.size(); ++b)
          if (pick[i] & (std::size_t{1} << b)) m.valuation[vocab[b]].insert(idx);
      }
      for (uint32_t w = 0; w < m.worlds.size(); ++w)
        if (!satisfies(m, w, f, lim)) {
          Verdict v{Verdict::Outcome::CounterexamplePointed};
          v.model = m;
          v.world = w;
          found = v;
          return;
        }
    }
    if (left == 0) return;
    for (std::size_t c = from; c < classes; ++c) {
      pick.push_back(c);
      go(c, left - 1);
      pick.pop_back();
      if (found) return;
    }
  };
  go(0, maxWorlds);
  if (found) return *found;
  Verdict v{Verdict::Outcome::NoCounterexampleUpTo};
  v.bound = maxWorlds;
  return v;
}

T23Report t23Report(unsigned contextDepth) {
  T23Report rep;
  // Six worlds, each making exactly two of p1..p4 true.
  const std::vector<std::pair<int, int>> pairs = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  for (const auto& [i, j] : pairs) {
    uint32_t idx = static_cast<uint32_t>(rep.model.worlds.size());
    rep.model.worlds.push_back("w" + std::to_string(i) + std::to_string(j));
    rep.model.valuation["p" + std::to_string(i)].insert(idx);
    rep.model.valuation["p" + std::to_string(j)].insert(idx);
  }
  rep.state = rep.model.fullState();
  rep.psi = disj(disj(disj(atom("p1"), atom("p2")), atom("p3")), atom("p4"));
  rep.target = tensor(2, 3, {rep.psi, rep.psi, rep.psi});

  const std::vector<std::pair<std::string, FormulaPtr>> classes = {
      {"bot", bottom()},
      {"psi", rep.psi},
      {"psi(+)psi", tensor(1, 2, {rep.psi, rep.psi})},
      {"top", top()},
  };
  SupportBudget budget;
  for (const auto& [name, cls] : classes) {
    T23Check c;
    c.className = name;
    c.equivalent =
        relativizedEquivalentWitness(rep.model, rep.state, rep.target, cls, c.witness, budget);
    rep.checks.push_back(std::move(c));
  }

  // Contexts phi(p0) over bot, the hole, and one foreign atom; every binary
  // connective of the tensor-free-plus-binary-tensor language.
  std::vector<FormulaPtr> layer = {bottom(), atom("p0"), atom("r")};
  auto addUnique = [](std::vector<FormulaPtr>& v, FormulaPtr f) {
    for (const auto& g : v)
      if (equal(g, f)) return;
    v.push_back(std::move(f));
  };
  for (unsigned d = 0; d < contextDepth; ++d) {
    std::vector<FormulaPtr> next = layer;
    for (const auto& a : layer)
      for (const auto& b : layer) {
        addUnique(next, conj(a, b));
        addUnique(next, disj(a, b));
        addUnique(next, implies(a, b));
        addUnique(next, tensor(1, 2, {a, b}));
      }
    layer = std::move(next);
  }

  std::vector<std::vector<bool>> classProfiles;
  for (const auto& [name, cls] : classes)
    classProfiles.push_back(supportProfile(rep.model, rep.state, cls, budget));
  for (const auto& ctx : layer) {
    T23Context tc;
    tc.context = ctx;
    auto inst = substitute(ctx, "p0", rep.psi);
    auto prof = supportProfile(rep.model, rep.state, inst, budget);
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (prof == classProfiles[i]) {
        tc.classifiedAs = classes[i].first;
        break;
      }
    rep.contexts.push_back(std::move(tc));
  }
  return rep;
}

}  // namespace inqkh
