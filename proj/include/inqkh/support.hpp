#pragma once

#include "inqkh/models.hpp"
#include "inqkh/syntax.hpp"

namespace inqkh {

struct SupportBudget {
  // Implication and tensor clauses enumerate substates; states wider than
  // this many worlds raise BudgetError.
  unsigned maxStateBits = 20;
};

// State-based support for the propositional fragment. Throws StructureError
// on modal input, BudgetError past the limits. Models must have <= 64 worlds.
bool supports(const Model& m, const State& s, const FormulaPtr& a,
              const SupportBudget& budget = {});

// a and b supported by exactly the same substates of s.
bool relativizedEquivalent(const Model& m, const State& s, const FormulaPtr& a,
                           const FormulaPtr& b, const SupportBudget& budget = {});

// Support of a at every substate of s: entry i covers the substate selected
// by the bits of i over the worlds of s in ascending order. Shares one memo
// across the whole enumeration.
std::vector<bool> supportProfile(const Model& m, const State& s, const FormulaPtr& a,
                                 const SupportBudget& budget = {});

// As relativizedEquivalent, but reports a distinguishing substate through out.
bool relativizedEquivalentWitness(const Model& m, const State& s, const FormulaPtr& a,
                                  const FormulaPtr& b, State& witness,
                                  const SupportBudget& budget = {});

}  // namespace inqkh
