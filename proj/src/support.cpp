#include "inqkh/support.hpp"

#include <bit>
#include <functional>
#include <unordered_map>
#include <vector>

namespace inqkh {

namespace {

uint64_t maskOf(const State& s, std::size_t worldCount) {
  uint64_t m = 0;
  for (uint32_t i : s) {
    if (i >= worldCount) throw StructureError("state contains an unknown world");
    m |= uint64_t{1} << i;
  }
  return m;
}

class Evaluator {
 public:
  Evaluator(const Model& m, const SupportBudget& b) : model_(m), budget_(b) {
    if (m.worlds.size() > 64)
      throw BudgetError("support evaluation limited to models with at most 64 worlds");
  }

  bool eval(const FormulaPtr& a, uint64_t s) {
    if (s == 0) return true;  // the empty state supports everything
    auto key = std::make_pair(a.get(), s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = evalRaw(a, s);
    memo_[key] = r;
    return r;
  }

 private:
  uint64_t atomMask(const std::string& p) {
    if (auto it = atomMasks_.find(p); it != atomMasks_.end()) return it->second;
    uint64_t m = 0;
    if (auto it = model_.valuation.find(p); it != model_.valuation.end())
      for (uint32_t i : it->second) m |= uint64_t{1} << i;
    atomMasks_[p] = m;
    return m;
  }

  void checkWidth(uint64_t s, const FormulaPtr& a) {
    if (static_cast<unsigned>(std::popcount(s)) > budget_.maxStateBits)
      throw BudgetError("substate enumeration over a " +
                        std::to_string(std::popcount(s)) +
                        "-world state exceeds the budget at: " + render(a));
  }

  bool evalRaw(const FormulaPtr& a, uint64_t s) {
    switch (a->kind) {
      case Kind::Atom:
        return (s & ~atomMask(a->name)) == 0;
      case Kind::Bottom:
        return false;  // s != 0 here
      case Kind::And:
        return eval(a->args[0], s) && eval(a->args[1], s);
      case Kind::Or:
        return eval(a->args[0], s) || eval(a->args[1], s);
      case Kind::Implies: {
        checkWidth(s, a);
        // All substates t of s with t |= antecedent must have t |= consequent.
        for (uint64_t t = s;; t = (t - 1) & s) {
          if (eval(a->args[0], t) && !eval(a->args[1], t)) return false;
          if (t == 0) break;
        }
        return true;
      }
      case Kind::Tensor:
        return evalTensor(a, s);
      default:
        throw StructureError("support is defined on propositional formulas only, got: " +
                             render(a));
    }
  }

  // s |= tensor[k,n](a1..an) iff there are t1..tn subsets of s, each supporting
  // its argument, with every world of s in at least k of them. Equivalently:
  // assign each world a membership set I_w of size >= k; the induced t_i are
  // exactly the witnesses. Downward closure lets us prune as soon as a partial
  // t_i fails.
  bool evalTensor(const FormulaPtr& a, uint64_t s) {
    checkWidth(s, a);
    int n = a->tensorN, k = a->tensorK;
    std::vector<uint32_t> worlds;
    for (uint32_t i = 0; i < 64; ++i)
      if (s & (uint64_t{1} << i)) worlds.push_back(i);
    std::vector<unsigned> choices;  // membership sets with >= k elements
    for (unsigned I = 0; I < (1u << n); ++I)
      if (std::popcount(I) >= k) choices.push_back(I);
    std::vector<uint64_t> t(n, 0);
    std::function<bool(std::size_t)> go = [&](std::size_t wi) -> bool {
      if (wi == worlds.size()) return true;
      uint64_t wbit = uint64_t{1} << worlds[wi];
      for (unsigned I : choices) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
          if (I & (1u << i)) {
            t[i] |= wbit;
            if (!eval(a->args[i], t[i])) ok = false;
          }
        if (ok && go(wi + 1)) return true;
        for (int i = 0; i < n; ++i)
          if (I & (1u << i)) t[i] &= ~wbit;
      }
      return false;
    };
    return go(0);
  }

  const Model& model_;
  SupportBudget budget_;
  struct KeyHash {
    std::size_t operator()(const std::pair<const Formula*, uint64_t>& k) const {
      return std::hash<const Formula*>{}(k.first) ^ (k.second * 0x9e3779b97f4a7c15ull);
    }
  };
  std::unordered_map<std::pair<const Formula*, uint64_t>, bool, KeyHash> memo_;
  std::unordered_map<std::string, uint64_t> atomMasks_;
};

}  // namespace

bool supports(const Model& m, const State& s, const FormulaPtr& a, const SupportBudget& budget) {
  if (!isPropositional(a))
    throw StructureError("support is defined on propositional formulas only, got: " + render(a));
  Evaluator ev(m, budget);
  return ev.eval(a, maskOf(s, m.worlds.size()));
}

std::vector<bool> supportProfile(const Model& m, const State& s, const FormulaPtr& a,
                                 const SupportBudget& budget) {
  if (!isPropositional(a))
    throw StructureError("support is defined on propositional formulas only, got: " + render(a));
  if (s.size() > budget.maxStateBits)
    throw BudgetError("support profile over a " + std::to_string(s.size()) +
                      "-world state exceeds the budget");
  std::vector<uint32_t> worlds(s.begin(), s.end());
  Evaluator ev(m, budget);
  std::vector<bool> out(std::size_t{1} << worlds.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    uint64_t mask = 0;
    for (std::size_t b = 0; b < worlds.size(); ++b)
      if (i & (std::size_t{1} << b)) mask |= uint64_t{1} << worlds[b];
    out[i] = ev.eval(a, mask);
  }
  return out;
}

bool relativizedEquivalentWitness(const Model& m, const State& s, const FormulaPtr& a,
                                  const FormulaPtr& b, State& witness,
                                  const SupportBudget& budget) {
  if (!isPropositional(a) || !isPropositional(b))
    throw StructureError("relativized equivalence is defined on propositional formulas only");
  if (s.size() > budget.maxStateBits)
    throw BudgetError("relativized equivalence over a " + std::to_string(s.size()) +
                      "-world state exceeds the budget");
  Evaluator ev(m, budget);
  uint64_t sm = maskOf(s, m.worlds.size());
  for (uint64_t t = sm;; t = (t - 1) & sm) {
    if (ev.eval(a, t) != ev.eval(b, t)) {
      witness.clear();
      for (uint32_t i = 0; i < 64; ++i)
        if (t & (uint64_t{1} << i)) witness.insert(i);
      return false;
    }
    if (t == 0) break;
  }
  return true;
}

bool relativizedEquivalent(const Model& m, const State& s, const FormulaPtr& a,
                           const FormulaPtr& b, const SupportBudget& budget) {
  State w;
  return relativizedEquivalentWitness(m, s, a, b, w, budget);
}

}  // namespace inqkh
