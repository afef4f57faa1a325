#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "inqkh/errors.hpp"

namespace inqkh {

// Abstract syntax for the full modal language. Derived forms (~, top, <->,
// dependence atoms, exists, diamond announcement, box) are expanded to these
// primitives at parse time; the AST has no nodes for them.
enum class Kind {
  Atom,
  Bottom,
  And,
  Or,
  Implies,
  Tensor,   // generalized tensor; the binary tensor is Tensor(1,2)
  K,
  Kh,       // body must be propositional
  Forall,
  Announce  // args[0] announced, args[1] body
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
 public:
  Kind kind;
  std::string name;               // Atom name, or Forall binder
  int tensorK = 0, tensorN = 0;   // Tensor signature
  std::vector<FormulaPtr> args;

  Formula(Kind k, std::string n, int tk, int tn, std::vector<FormulaPtr> a)
      : kind(k), name(std::move(n)), tensorK(tk), tensorN(tn), args(std::move(a)) {}
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);
std::size_t hashOf(const FormulaPtr& f);

// Structural total order, used wherever determinism requires one.
int compare(const FormulaPtr& a, const FormulaPtr& b);

// --- constructors -----------------------------------------------------------

FormulaPtr atom(const std::string& name);
FormulaPtr bottom();
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
// Throws StructureError unless n >= 2, 1 <= k <= n and args.size() == n.
FormulaPtr tensor(int k, int n, std::vector<FormulaPtr> args);
FormulaPtr know(FormulaPtr a);
// Throws StructureError if the body is not propositional.
FormulaPtr knowHow(FormulaPtr a);
FormulaPtr forall(const std::string& p, FormulaPtr body);
FormulaPtr announce(FormulaPtr announced, FormulaPtr body);

// Derived forms, expanded on construction.
FormulaPtr neg(FormulaPtr a);                  // a -> bot
FormulaPtr top();                              // bot -> bot
FormulaPtr iff(FormulaPtr a, FormulaPtr b);    // (a -> b) & (b -> a)
FormulaPtr exists(const std::string& p, FormulaPtr body);  // ~forall p. ~body
bool isTop(const FormulaPtr& f);               // the literal bot -> bot
// Splits an expanded biconditional (a -> b) & (b -> a); false if not that shape.
bool splitIff(const FormulaPtr& f, FormulaPtr& a, FormulaPtr& b);

// --- queries ----------------------------------------------------------------

// True iff f contains no K, Kh, Forall or Announce node.
bool isPropositional(const FormulaPtr& f);
bool containsKind(const FormulaPtr& f, Kind k);

// Atoms occurring free; atoms under Kh, K, Announce count unless forall-bound.
std::set<std::string> freeAtoms(const FormulaPtr& f);
// Every atom name occurring at all, including binder names.
std::set<std::string> allAtoms(const FormulaPtr& f);
bool occursFree(const FormulaPtr& f, const std::string& p);

// Replaces every free occurrence of p by g. Throws StructureError on capture
// or when the replacement would put a modal formula under Kh.
FormulaPtr substitute(const FormulaPtr& f, const std::string& p, const FormulaPtr& g);

// Least `_q<i>` not in avoid.
std::string freshAtom(const std::set<std::string>& avoid);

// --- concrete syntax --------------------------------------------------------

FormulaPtr parse(const std::string& text);

struct RenderOptions {
  bool sugar = false;  // print a -> bot as ~a and bot -> bot as top
};
std::string render(const FormulaPtr& f, const RenderOptions& opts = {});

// --- tree addressing (used by the rewrite engine) ---------------------------

FormulaPtr subterm(const FormulaPtr& f, const std::vector<int>& path);
FormulaPtr replaceAt(const FormulaPtr& f, const std::vector<int>& path, const FormulaPtr& g);

}  // namespace inqkh
