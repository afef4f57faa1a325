#include "inqkh/proofs.hpp"

#include <algorithm>
#include <functional>

#include "inqkh/rewrite.hpp"
#include "json.hpp"

namespace inqkh {

namespace {

// Metavariable leaves in schemas: ?phi/?psi/?chi range over formulas,
// ?alpha/?beta over propositional formulas, ?p/?q over atoms, ?pb over
// atoms-or-bottom. The '?' prefix cannot be produced by the parser, so
// schemas never collide with user formulas.
bool isMeta(const std::string& n) { return !n.empty() && n[0] == '?'; }

bool sortAllows(const std::string& meta, const FormulaPtr& f) {
  if (meta == "?alpha" || meta == "?beta") return isPropositional(f);
  if (meta == "?p" || meta == "?q") return f->kind == Kind::Atom;
  if (meta == "?pb") return f->kind == Kind::Atom || f->kind == Kind::Bottom;
  return true;
}

bool matchRec(const FormulaPtr& schema, const FormulaPtr& f, Binding& b) {
  if (schema->kind == Kind::Atom && isMeta(schema->name)) {
    auto it = b.find(schema->name);
    if (it != b.end()) return equal(it->second, f);
    if (!sortAllows(schema->name, f)) return false;
    b[schema->name] = f;
    return true;
  }
  if (schema->kind != f->kind) return false;
  if (schema->kind == Kind::Forall && isMeta(schema->name)) {
    auto it = b.find(schema->name);
    auto bound = atom(f->name);
    if (it != b.end()) {
      if (!equal(it->second, bound)) return false;
    } else {
      b[schema->name] = bound;
    }
  } else if (schema->name != f->name) {
    return false;
  }
  if (schema->tensorK != f->tensorK || schema->tensorN != f->tensorN) return false;
  if (schema->args.size() != f->args.size()) return false;
  for (std::size_t i = 0; i < schema->args.size(); ++i)
    if (!matchRec(schema->args[i], f->args[i], b)) return false;
  return true;
}

FormulaPtr mPhi() { return atom("?phi"); }
FormulaPtr mPsi() { return atom("?psi"); }
FormulaPtr mChi() { return atom("?chi"); }
FormulaPtr mAlpha() { return atom("?alpha"); }
FormulaPtr mBeta() { return atom("?beta"); }
FormulaPtr mP() { return atom("?p"); }
FormulaPtr mQ() { return atom("?q"); }
FormulaPtr mPb() { return atom("?pb"); }

// --- TAUT -------------------------------------------------------------------

// Truth-tables f with maximal non-boolean subformulas opaque. And/Or/Implies/
// Bottom are the boolean skeleton; atoms, modalities, quantifiers,
// announcements and tensors are opaque leaves.
struct TautChecker {
  std::vector<FormulaPtr> vars;

  int varIndex(const FormulaPtr& f) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (equal(vars[i], f)) return static_cast<int>(i);
    vars.push_back(f);
    return static_cast<int>(vars.size()) - 1;
  }

  struct Node {
    Kind kind;
    int var = -1;
    int l = -1, r = -1;
  };
  std::vector<Node> nodes;

  int build(const FormulaPtr& f) {
    Node n;
    switch (f->kind) {
      case Kind::Bottom:
        n.kind = Kind::Bottom;
        break;
      case Kind::And:
      case Kind::Or:
      case Kind::Implies:
        n.kind = f->kind;
        n.l = build(f->args[0]);
        n.r = build(f->args[1]);
        break;
      default:
        n.kind = Kind::Atom;
        n.var = varIndex(f);
        break;
    }
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }

  bool evalNode(int i, unsigned long mask) const {
    const Node& n = nodes[i];
    switch (n.kind) {
      case Kind::Bottom:
        return false;
      case Kind::And:
        return evalNode(n.l, mask) && evalNode(n.r, mask);
      case Kind::Or:
        return evalNode(n.l, mask) || evalNode(n.r, mask);
      case Kind::Implies:
        return !evalNode(n.l, mask) || evalNode(n.r, mask);
      default:
        return (mask >> n.var) & 1;
    }
  }

  bool isTautology(const FormulaPtr& f) {
    int root = build(f);
    if (vars.size() > 22)
      throw BudgetError("tautology check over " + std::to_string(vars.size()) +
                        " distinct subformulas exceeds the budget");
    for (unsigned long mask = 0; mask < (1ul << vars.size()); ++mask)
      if (!evalNode(root, mask)) return false;
    return true;
  }
};

// --- schema-specific matchers ----------------------------------------------

std::optional<Binding> matchSimple(const FormulaPtr& schema, const FormulaPtr& f) {
  Binding b;
  if (matchRec(schema, f, b)) return b;
  return std::nullopt;
}

std::optional<Binding> matchRdTensorKn(const FormulaPtr& f) {
  FormulaPtr l, r;
  if (!splitIff(f, l, r)) return std::nullopt;
  if (l->kind != Kind::Tensor) return std::nullopt;
  if (!equal(r, rdTensorExpansion(l->tensorK, l->tensorN, l->args))) return std::nullopt;
  return Binding{};
}

std::optional<Binding> matchSubForall(const FormulaPtr& f) {
  if (f->kind != Kind::Implies) return std::nullopt;
  const FormulaPtr& l = f->args[0];
  const FormulaPtr& r = f->args[1];
  if (l->kind != Kind::Forall) return std::nullopt;
  const std::string& p = l->name;
  const FormulaPtr& body = l->args[0];
  if (!occursFree(body, p)) {
    if (equal(body, r)) return Binding{{"?p", atom(p)}};
    return std::nullopt;
  }
  // Read the candidate instantiation off the first free occurrence of p.
  std::vector<int> path;
  std::function<bool(const FormulaPtr&)> find = [&](const FormulaPtr& g) {
    if (g->kind == Kind::Atom) return g->name == p;
    if (g->kind == Kind::Forall && g->name == p) return false;
    for (std::size_t i = 0; i < g->args.size(); ++i) {
      path.push_back(static_cast<int>(i));
      if (find(g->args[i])) return true;
      path.pop_back();
    }
    return false;
  };
  if (!find(body)) return std::nullopt;
  FormulaPtr psi;
  try {
    psi = subterm(r, path);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  try {
    if (!equal(substitute(body, p, psi), r)) return std::nullopt;
  } catch (const StructureError&) {
    return std::nullopt;  // not free for p, or ill-formed under Kh
  }
  return Binding{{"?p", atom(p)}, {"?psi", psi}};
}

// Peels one expanded "exists q" wrapper: (forall q (body -> bot)) -> bot.
bool peelExists(const FormulaPtr& f, std::string& q, FormulaPtr& body) {
  if (f->kind != Kind::Implies || f->args[1]->kind != Kind::Bottom) return false;
  const FormulaPtr& fa = f->args[0];
  if (fa->kind != Kind::Forall) return false;
  const FormulaPtr& inner = fa->args[0];
  if (inner->kind != Kind::Implies || inner->args[1]->kind != Kind::Bottom) return false;
  q = fa->name;
  body = inner->args[0];
  return true;
}

std::optional<Binding> matchKhTensorKn(const FormulaPtr& f) {
  FormulaPtr l, r;
  if (!splitIff(f, l, r)) return std::nullopt;
  if (l->kind != Kind::Kh || l->args[0]->kind != Kind::Tensor) return std::nullopt;
  const FormulaPtr& t = l->args[0];
  int n = t->tensorN;
  std::vector<std::string> qs;
  FormulaPtr cur = r;
  for (int i = 0; i < n; ++i) {
    std::string q;
    FormulaPtr body;
    if (!peelExists(cur, q, body)) return std::nullopt;
    qs.push_back(q);
    cur = body;
  }
  if (!equal(r, khTensorRhs(t->tensorK, n, t->args, qs))) return std::nullopt;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      if (qs[i] == qs[j]) return std::nullopt;
    for (const auto& arg : t->args)
      if (occursFree(arg, qs[i])) return std::nullopt;
  }
  return Binding{};
}

struct AxiomEntry {
  std::vector<FormulaPtr> schemas;  // any may match
  std::function<bool(const Binding&)> side;
  std::function<std::optional<Binding>(const FormulaPtr&)> custom;
};

bool pNotInChi(const Binding& b) {
  return allAtoms(b.at("?chi")).count(b.at("?p")->name) == 0;
}

bool pNotFreeInAlphaBeta(const Binding& b) {
  const std::string& p = b.at("?p")->name;
  return !occursFree(b.at("?alpha"), p) && !occursFree(b.at("?beta"), p);
}

const std::map<std::string, AxiomEntry>& catalog() {
  static const std::map<std::string, AxiomEntry> table = [] {
    std::map<std::string, AxiomEntry> t;
    auto add = [&](const std::string& name, std::vector<FormulaPtr> schemas,
                   std::function<bool(const Binding&)> side = nullptr) {
      t[name] = AxiomEntry{std::move(schemas), std::move(side), nullptr};
    };
    add("Rd⊗", {iff(tensor(1, 2, {mPhi(), mPsi()}), disj(mPhi(), mPsi()))});
    add("DIST_K", {implies(know(implies(mPhi(), mPsi())),
                           implies(know(mPhi()), know(mPsi())))});
    add("[]p", {iff(announce(mChi(), mPb()), implies(mChi(), mPb()))});
    add("[]○", {iff(announce(mChi(), conj(mPhi(), mPsi())),
                    conj(announce(mChi(), mPhi()), announce(mChi(), mPsi()))),
                iff(announce(mChi(), disj(mPhi(), mPsi())),
                    disj(announce(mChi(), mPhi()), announce(mChi(), mPsi()))),
                iff(announce(mChi(), tensor(1, 2, {mPhi(), mPsi()})),
                    tensor(1, 2, {announce(mChi(), mPhi()), announce(mChi(), mPsi())})),
                iff(announce(mChi(), implies(mPhi(), mPsi())),
                    implies(announce(mChi(), mPhi()), announce(mChi(), mPsi())))});
    add("[]K", {iff(announce(mChi(), know(mPhi())),
                    implies(mChi(), know(announce(mChi(), mPhi()))))});
    add("[]∀", {iff(announce(mChi(), forall("?p", mPhi())),
                    forall("?p", announce(mChi(), mPhi())))},
        pNotInChi);
    add("DIST∀", {implies(forall("?p", implies(mPhi(), mPsi())),
                          implies(forall("?p", mPhi()), forall("?p", mPsi())))});
    add("SU", {exists("?p", conj(mP(), forall("?q", implies(mQ(), know(implies(mP(), mQ()))))))},
        [](const Binding& b) { return !equal(b.at("?p"), b.at("?q")); });
    add("BC", {implies(forall("?p", know(mPhi())), know(forall("?p", mPhi())))});
    add("KhK", {implies(knowHow(mAlpha()), know(mAlpha()))});
    add("KKhp", {implies(know(mP()), knowHow(mP()))});
    add("Kh⊥", {iff(knowHow(bottom()), bottom())});
    add("Kh∨", {iff(knowHow(disj(mAlpha(), mBeta())),
                    disj(knowHow(mAlpha()), knowHow(mBeta())))});
    add("Kh∧", {iff(knowHow(conj(mAlpha(), mBeta())),
                    conj(knowHow(mAlpha()), knowHow(mBeta())))});
    add("Kh→", {iff(knowHow(implies(mAlpha(), mBeta())), khArrowRhs(mAlpha(), mBeta(), "?p"))},
        pNotFreeInAlphaBeta);
    add("Kh⊗", {iff(knowHow(tensor(1, 2, {mAlpha(), mBeta()})),
                    khBinTensorRhs(mAlpha(), mBeta(), "?p"))},
        pNotFreeInAlphaBeta);
    add("T_K", {implies(know(mPhi()), mPhi())});
    add("4_K", {implies(know(mPhi()), know(know(mPhi())))});
    add("5_K", {implies(neg(know(mPhi())), know(neg(know(mPhi()))))});
    add("4_Kh", {implies(knowHow(mAlpha()), know(knowHow(mAlpha())))});
    add("5_Kh", {implies(neg(knowHow(mAlpha())), know(neg(knowHow(mAlpha()))))});
    t["TAUT"] = AxiomEntry{{}, nullptr, [](const FormulaPtr& f) -> std::optional<Binding> {
                             TautChecker tc;
                             if (tc.isTautology(f)) return Binding{};
                             return std::nullopt;
                           }};
    t["Rd⊗ᵏₙ"] = AxiomEntry{{}, nullptr, matchRdTensorKn};
    t["SUB∀"] = AxiomEntry{{}, nullptr, matchSubForall};
    t["Kh⊗ᵏₙ"] = AxiomEntry{{}, nullptr, matchKhTensorKn};
    return t;
  }();
  return table;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> table = {
      {"Rd(+)", "Rd⊗"},         {"Rdtensor", "Rd⊗"},
      {"Rd(+)kn", "Rd⊗ᵏₙ"},     {"Rdtensorkn", "Rd⊗ᵏₙ"},
      {"[]o", "[]○"},           {"[]bin", "[]○"},
      {"[]forall", "[]∀"},      {"DISTforall", "DIST∀"},
      {"SUBforall", "SUB∀"},    {"Khbot", "Kh⊥"},
      {"Khor", "Kh∨"},          {"Khand", "Kh∧"},
      {"Khimp", "Kh→"},         {"Kh(+)", "Kh⊗"},
      {"Khtensor", "Kh⊗"},      {"Kh(+)kn", "Kh⊗ᵏₙ"},
      {"Khtensorkn", "Kh⊗ᵏₙ"},
  };
  return table;
}

}  // namespace

bool isCatalogAxiom(const std::string& name) {
  return catalog().count(name) > 0 || aliases().count(name) > 0;
}

std::string canonicalAxiomName(const std::string& name) {
  if (catalog().count(name)) return name;
  if (auto it = aliases().find(name); it != aliases().end()) return it->second;
  throw StructureError("unknown axiom name '" + name + "'");
}

std::optional<Binding> matchesAxiom(const std::string& name, const FormulaPtr& f) {
  const AxiomEntry& e = catalog().at(canonicalAxiomName(name));
  if (e.custom) return e.custom(f);
  for (const auto& schema : e.schemas) {
    Binding b;
    if (matchRec(schema, f, b)) {
      if (!e.side || e.side(b)) return b;
    }
  }
  return std::nullopt;
}

namespace {

// rRE occurrence check: left obtainable from right by replacing occurrences
// of psi with phi, never under a Kh node.
bool rreAny(const FormulaPtr& l, const FormulaPtr& r, const FormulaPtr& phi,
            const FormulaPtr& psi);
bool rreOne(const FormulaPtr& l, const FormulaPtr& r, const FormulaPtr& phi,
            const FormulaPtr& psi);

bool sameHead(const FormulaPtr& a, const FormulaPtr& b) {
  return a->kind == b->kind && a->name == b->name && a->tensorK == b->tensorK &&
         a->tensorN == b->tensorN && a->args.size() == b->args.size();
}

bool rreAny(const FormulaPtr& l, const FormulaPtr& r, const FormulaPtr& phi,
            const FormulaPtr& psi) {
  if (equal(r, psi) && equal(l, phi)) return true;
  if (equal(l, r)) return true;
  if (!sameHead(l, r) || l->kind == Kind::Kh) return false;
  for (std::size_t i = 0; i < l->args.size(); ++i)
    if (!rreAny(l->args[i], r->args[i], phi, psi)) return false;
  return true;
}

bool rreOne(const FormulaPtr& l, const FormulaPtr& r, const FormulaPtr& phi,
            const FormulaPtr& psi) {
  if (equal(r, psi) && equal(l, phi)) return true;
  if (!sameHead(l, r) || l->kind == Kind::Kh) return false;
  for (std::size_t i = 0; i < l->args.size(); ++i) {
    bool rest = true;
    for (std::size_t j = 0; j < l->args.size() && rest; ++j)
      if (j != i) rest = rreAny(l->args[j], r->args[j], phi, psi);
    if (rest && rreOne(l->args[i], r->args[i], phi, psi)) return true;
  }
  return false;
}

}  // namespace

CheckResult checkProof(const ProofScript& s) {
  auto reject = [](int line, std::string reason, bool structural = false) {
    return CheckResult{false, line, std::move(reason), structural};
  };
  if (s.lines.empty()) return reject(0, "empty proof", true);
  for (std::size_t idx = 0; idx < s.lines.size(); ++idx) {
    int lineNo = static_cast<int>(idx) + 1;
    const ProofLine& ln = s.lines[idx];
    const Justification& by = ln.by;
    auto premise = [&](int i) -> const FormulaPtr& {
      return s.lines[static_cast<std::size_t>(i) - 1].formula;
    };
    auto badIndex = [&](int i) { return i < 1 || i > static_cast<int>(idx); };
    switch (by.tag) {
      case Justification::Tag::Axiom: {
        if (!isCatalogAxiom(by.axiomName))
          return reject(lineNo, "unknown axiom name '" + by.axiomName + "'", true);
        std::optional<Binding> b;
        try {
          b = matchesAxiom(by.axiomName, ln.formula);
        } catch (const BudgetError& e) {
          return reject(lineNo, e.what());
        }
        if (!b)
          return reject(lineNo, "not an instance of " + canonicalAxiomName(by.axiomName));
        break;
      }
      case Justification::Tag::MP: {
        if (badIndex(by.i) || badIndex(by.j))
          return reject(lineNo, "premise index out of range", true);
        const FormulaPtr& maj = premise(by.j);
        if (maj->kind != Kind::Implies || !equal(maj->args[0], premise(by.i)) ||
            !equal(maj->args[1], ln.formula))
          return reject(lineNo, "modus ponens premises do not fit");
        break;
      }
      case Justification::Tag::NecK: {
        if (badIndex(by.i)) return reject(lineNo, "premise index out of range", true);
        if (ln.formula->kind != Kind::K || !equal(ln.formula->args[0], premise(by.i)))
          return reject(lineNo, "necessitation premise does not fit");
        break;
      }
      case Justification::Tag::GenForall: {
        if (badIndex(by.i)) return reject(lineNo, "premise index out of range", true);
        const FormulaPtr& prem = premise(by.i);
        const FormulaPtr& cur = ln.formula;
        if (prem->kind != Kind::Implies || cur->kind != Kind::Implies ||
            !equal(prem->args[0], cur->args[0]) || cur->args[1]->kind != Kind::Forall ||
            cur->args[1]->name != by.boundAtom ||
            !equal(cur->args[1]->args[0], prem->args[1]))
          return reject(lineNo, "generalization premise does not fit");
        if (occursFree(prem->args[0], by.boundAtom))
          return reject(lineNo, "generalized atom occurs free in the antecedent");
        break;
      }
      case Justification::Tag::RRE: {
        if (badIndex(by.i)) return reject(lineNo, "premise index out of range", true);
        FormulaPtr phi, psi, l, r;
        if (!splitIff(premise(by.i), phi, psi))
          return reject(lineNo, "replacement premise is not a biconditional");
        if (!splitIff(ln.formula, l, r))
          return reject(lineNo, "replacement conclusion is not a biconditional");
        if (!rreOne(l, r, phi, psi))
          return reject(lineNo,
                        "left side is not the right side with occurrences replaced "
                        "(or the replacement would cross a Kh scope)");
        break;
      }
    }
  }
  if (s.goal && !equal(s.goal, s.lines.back().formula))
    return reject(static_cast<int>(s.lines.size()),
                  "declared goal differs from the last line", true);
  return {true, 0, "", false};
}

// --- trace generation -------------------------------------------------------

namespace {

struct ScriptBuilder {
  ProofScript script;

  int add(FormulaPtr f, Justification j) {
    script.lines.push_back({std::move(f), std::move(j)});
    return static_cast<int>(script.lines.size());
  }
  int axiom(FormulaPtr f, const std::string& name) {
    Justification j;
    j.tag = Justification::Tag::Axiom;
    j.axiomName = name;
    return add(std::move(f), j);
  }
  int mp(FormulaPtr f, int i, int jj) {
    Justification j;
    j.tag = Justification::Tag::MP;
    j.i = i;
    j.j = jj;
    return add(std::move(f), j);
  }
  int rre(FormulaPtr f, int i) {
    Justification j;
    j.tag = Justification::Tag::RRE;
    j.i = i;
    return add(std::move(f), j);
  }
  int genForall(FormulaPtr f, int i, const std::string& p) {
    Justification j;
    j.tag = Justification::Tag::GenForall;
    j.i = i;
    j.boundAtom = p;
    return add(std::move(f), j);
  }

  // From lines a: X and b: Y derive X /\ Y (the expanded biconditional).
  int conjoin(int a, int b) {
    FormulaPtr x = script.lines[a - 1].formula;
    FormulaPtr y = script.lines[b - 1].formula;
    FormulaPtr both = conj(x, y);
    int t = axiom(implies(x, implies(y, both)), "TAUT");
    int m1 = mp(implies(y, both), a, t);
    return mp(both, b, m1);
  }

  // The equivalence line for one rewrite step (lhs <-> rhs).
  int equivalenceFor(const RewriteStep& st) {
    if (st.rule == "Khp") {
      int a = axiom(implies(st.lhs, st.rhs), "KhK");
      int b = axiom(implies(st.rhs, st.lhs), "KKhp");
      return conjoin(a, b);
    }
    if (st.rule == "rename") {
      // lhs = forall p body, rhs = forall q body[q/p] with q fresh.
      const std::string& p = st.lhs->name;
      const std::string& q = st.rhs->name;
      const FormulaPtr& body = st.lhs->args[0];
      const FormulaPtr& renamed = st.rhs->args[0];
      int s1 = axiom(implies(st.lhs, renamed), "SUB∀");
      int s2 = genForall(implies(st.lhs, st.rhs), s1, q);
      int s3 = axiom(implies(st.rhs, body), "SUB∀");
      int s4 = genForall(implies(st.rhs, st.lhs), s3, p);
      return conjoin(s2, s4);
    }
    return axiom(iff(st.lhs, st.rhs), st.rule);
  }
};

}  // namespace

ProofScript reductionTrace(const FormulaPtr& f) {
  RewriteTrace trace;
  FormulaPtr target = toClassicalEpistemic(f, &trace);
  ScriptBuilder sb;
  int chain = sb.axiom(iff(f, f), "TAUT");
  for (const auto& st : trace) {
    int eq = sb.equivalenceFor(st);
    int step = sb.rre(iff(st.before, st.after), eq);
    // Transitivity: (f <-> before) -> ((before <-> after) -> (f <-> after)).
    FormulaPtr goalNext = iff(f, st.after);
    FormulaPtr g = sb.script.lines[chain - 1].formula;
    FormulaPtr h = sb.script.lines[step - 1].formula;
    int t = sb.axiom(implies(g, implies(h, goalNext)), "TAUT");
    int m1 = sb.mp(implies(h, goalNext), chain, t);
    chain = sb.mp(goalNext, step, m1);
  }
  sb.script.goal = iff(f, target);
  return sb.script;
}

// --- JSON -------------------------------------------------------------------

ProofScript proofFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("proof file is not valid JSON: ") + e.what());
  }
  ProofScript s;
  if (j.contains("goal")) s.goal = parse(j["goal"].get<std::string>());
  if (!j.contains("lines") || !j["lines"].is_array())
    throw StructureError("proof file needs a \"lines\" array");
  for (const auto& lj : j["lines"]) {
    ProofLine ln;
    ln.formula = parse(lj.at("formula").get<std::string>());
    const auto& by = lj.at("by");
    if (by.contains("axiom")) {
      ln.by.tag = Justification::Tag::Axiom;
      ln.by.axiomName = by["axiom"].get<std::string>();
    } else if (by.contains("mp")) {
      ln.by.tag = Justification::Tag::MP;
      ln.by.i = by["mp"].at(0).get<int>();
      ln.by.j = by["mp"].at(1).get<int>();
    } else if (by.contains("necK")) {
      ln.by.tag = Justification::Tag::NecK;
      ln.by.i = by["necK"].get<int>();
    } else if (by.contains("genForall")) {
      ln.by.tag = Justification::Tag::GenForall;
      ln.by.i = by["genForall"].at(0).get<int>();
      ln.by.boundAtom = by["genForall"].at(1).get<std::string>();
    } else if (by.contains("rre")) {
      ln.by.tag = Justification::Tag::RRE;
      ln.by.i = by["rre"].get<int>();
    } else {
      throw StructureError("unknown justification in proof file");
    }
    s.lines.push_back(std::move(ln));
  }
  return s;
}

std::string proofToJson(const ProofScript& s) {
  nlohmann::json j;
  if (s.goal) j["goal"] = render(s.goal);
  j["lines"] = nlohmann::json::array();
  for (const auto& ln : s.lines) {
    nlohmann::json lj;
    lj["formula"] = render(ln.formula);
    switch (ln.by.tag) {
      case Justification::Tag::Axiom:
        lj["by"] = {{"axiom", ln.by.axiomName}};
        break;
      case Justification::Tag::MP:
        lj["by"] = {{"mp", {ln.by.i, ln.by.j}}};
        break;
      case Justification::Tag::NecK:
        lj["by"] = {{"necK", ln.by.i}};
        break;
      case Justification::Tag::GenForall:
        lj["by"] = {{"genForall", {ln.by.i, ln.by.boundAtom}}};
        break;
      case Justification::Tag::RRE:
        lj["by"] = {{"rre", ln.by.i}};
        break;
    }
    j["lines"].push_back(lj);
  }
  return j.dump(2);
}

}  // namespace inqkh
