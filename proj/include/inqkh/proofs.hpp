#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inqkh/syntax.hpp"

namespace inqkh {

struct Justification {
  enum class Tag { Axiom, MP, NecK, GenForall, RRE };
  Tag tag = Tag::Axiom;
  std::string axiomName;  // Axiom
  int i = 0, j = 0;       // 1-based premise lines
  std::string boundAtom;  // GenForall
};

struct ProofLine {
  FormulaPtr formula;
  Justification by;
};

struct ProofScript {
  FormulaPtr goal;  // optional; when set must equal the last line
  std::vector<ProofLine> lines;
};

using Binding = std::map<std::string, FormulaPtr>;

// True iff name (or an accepted ASCII alias) is in the axiom catalog.
bool isCatalogAxiom(const std::string& name);
// Canonical spelling of a catalog axiom name; throws StructureError otherwise.
std::string canonicalAxiomName(const std::string& name);

// A metavariable binding making the named schema equal to f, with all side
// conditions checked; absent when f is not an instance.
std::optional<Binding> matchesAxiom(const std::string& name, const FormulaPtr& f);

struct CheckResult {
  bool accepted = false;
  int line = 0;  // 1-based, first bad line when rejected
  std::string reason;
  bool structural = false;  // bad indices / unknown names, vs logical rejection
};

CheckResult checkProof(const ProofScript& s);

// A checkable derivation of f <-> toClassicalEpistemic(f).
ProofScript reductionTrace(const FormulaPtr& f);

// {"goal": "...", "lines": [{"formula": "...", "by": {...}}]}
ProofScript proofFromJson(const std::string& text);
std::string proofToJson(const ProofScript& s);

}  // namespace inqkh
