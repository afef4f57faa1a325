#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inqkh/models.hpp"
#include "inqkh/satisfaction.hpp"
#include "inqkh/support.hpp"
#include "inqkh/syntax.hpp"

namespace inqkh {

struct Verdict {
  enum class Outcome { Valid, CounterexamplePointed, CounterexampleState, NoCounterexampleUpTo };
  Outcome outcome;
  Model model;                      // counterexamples only
  uint32_t world = 0;               // CounterexamplePointed
  State state;                      // CounterexampleState: a refuting state
  State minimalState;               // CounterexampleState: shrunk witness
  unsigned bound = 0;               // NoCounterexampleUpTo

  bool positive() const {
    return outcome == Outcome::Valid || outcome == Outcome::NoCounterexampleUpTo;
  }
};

// Exact validity for the propositional fragment: support by the full state of
// the canonical model over the formula's atoms.
Verdict validInq(const FormulaPtr& a, unsigned vocabCap = 4);

// Exact entailment: every nonempty canonical state supporting all premises
// supports the conclusion.
Verdict entailsInq(const std::vector<FormulaPtr>& gamma, const FormulaPtr& a,
                   unsigned vocabCap = 4);

// Bounded countermodel search for the full language: all models given as
// multisets of valuation classes over the formula's atoms, 1..maxWorlds
// worlds total.
Verdict validBounded(const FormulaPtr& f, unsigned maxWorlds, const EvalLimits& lim = {});

// The uniform-definability counterexample kernel.
struct T23Check {
  std::string className;            // "bot", "psi", "psi(+)psi", "top"
  bool equivalent;
  State witness;                    // distinguishing substate when inequivalent
};
struct T23Context {
  FormulaPtr context;               // over the placeholder atom p0
  std::string classifiedAs;         // one of the four class names, or "" if none
};
struct T23Report {
  Model model;                      // the six-world model
  State state;                      // its full state
  FormulaPtr psi;
  FormulaPtr target;                // tensor[2,3](psi,psi,psi)
  std::vector<T23Check> checks;     // target vs each of the four classes
  std::vector<T23Context> contexts; // every enumerated context, classified
  bool allInequivalent() const {
    for (const auto& c : checks)
      if (c.equivalent) return false;
    return true;
  }
  bool allClassified() const {
    for (const auto& c : contexts)
      if (c.classifiedAs.empty()) return false;
    return true;
  }
};
T23Report t23Report(unsigned contextDepth);

}  // namespace inqkh
