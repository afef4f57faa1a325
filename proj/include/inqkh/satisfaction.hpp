#pragma once

#include "inqkh/models.hpp"
#include "inqkh/resolution.hpp"
#include "inqkh/support.hpp"
#include "inqkh/syntax.hpp"

namespace inqkh {

enum class KhBackend { Support, Resolution };

struct EvalLimits {
  // Quantifiers enumerate subsets of the world set; the counter limits the
  // total number of override evaluations across all nested quantifiers.
  unsigned maxQuantifierBits = 16;
  Budget resolutionBudget;
  KhBackend khBackend = KhBackend::Support;
  SupportBudget supportBudget;
};

// Pointed-model satisfaction for the full language. Outside Kh, | and (+)
// are both classical disjunction and tensor[k,n] means "at least k arguments
// true"; Kh consults the support or resolution machinery per the backend.
bool satisfies(const Model& m, uint32_t w, const FormulaPtr& f, const EvalLimits& lim = {});

// True at every world.
bool holdsGlobally(const Model& m, const FormulaPtr& f, const EvalLimits& lim = {});

// The worlds of m where f holds.
State extension(const Model& m, const FormulaPtr& f, const EvalLimits& lim = {});

}  // namespace inqkh
