#pragma once

#include <string>
#include <vector>

#include "inqkh/syntax.hpp"

namespace inqkh {

// One rewrite application: the whole formula before/after, the redex that was
// replaced (lhs -> rhs) at `path`, and the rule that licensed it. Rule names
// come from the axiom catalog, plus the derived rules "Khp" (Kh p -> K p) and
// "rename" (bound-variable renaming).
struct RewriteStep {
  FormulaPtr before;
  FormulaPtr after;
  std::string rule;
  std::vector<int> path;
  FormulaPtr lhs;
  FormulaPtr rhs;
};
using RewriteTrace = std::vector<RewriteStep>;

// Trace export: one line per step, `<rule> : <before> ==> <after>`.
std::string traceToText(const RewriteTrace& trace);

// Termination measure for announcement elimination. Throws DomainError on Kh.
unsigned announcementRank(const FormulaPtr& f);

// Removes every Kh via the reduction equivalences; optional step trace.
FormulaPtr eliminateKh(const FormulaPtr& f, RewriteTrace* trace = nullptr);

// Removes every announcement from a Kh-free formula. microTrace records the
// individual axiom applications; macroTrace records one step per eliminated
// innermost announcement (its lhs/rhs are the redex and its announcement-free
// replacement — the measure that strictly drops).
FormulaPtr eliminateAnnouncements(const FormulaPtr& f, RewriteTrace* microTrace = nullptr,
                                  RewriteTrace* macroTrace = nullptr);

// eliminateAnnouncements after eliminateKh, sharing one fresh-atom pool.
// The combined micro trace drives proof generation.
FormulaPtr toClassicalEpistemic(const FormulaPtr& f, RewriteTrace* microTrace = nullptr);

// The set RL(a), deduplicated, in canonical structural order.
std::vector<FormulaPtr> realizations(const FormulaPtr& a, std::size_t maxCount = 100000);

// Right-nested disjunction of RL(a) in canonical order.
FormulaPtr normalForm(const FormulaPtr& a, std::size_t maxCount = 100000);

// Innermost-first fixpoint of the tensor reduction laws (full-conjunction,
// literal top/bottom absorption, unary-threshold chaining).
FormulaPtr simplifyGeneralTensor(const FormulaPtr& a);

// Right-hand side of the tensor truth expansion: the disjunction over all
// k-element index sets (ascending) of the conjunctions of selected args.
FormulaPtr rdTensorExpansion(int k, int n, const std::vector<FormulaPtr>& args);

// Right-hand sides of the Kh reduction equivalences, shared with the proof
// checker's schema matcher.
FormulaPtr khArrowRhs(const FormulaPtr& a, const FormulaPtr& b, const std::string& q);
FormulaPtr khBinTensorRhs(const FormulaPtr& a, const FormulaPtr& b, const std::string& q);
FormulaPtr khTensorRhs(int k, int n, const std::vector<FormulaPtr>& args,
                       const std::vector<std::string>& qs);

}  // namespace inqkh
