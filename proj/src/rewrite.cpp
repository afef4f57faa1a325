#include "inqkh/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace inqkh {

std::string traceToText(const RewriteTrace& trace) {
  std::ostringstream os;
  for (const auto& s : trace)
    os << s.rule << " : " << render(s.before) << " ==> " << render(s.after) << '\n';
  return os.str();
}

unsigned announcementRank(const FormulaPtr& f) {
  switch (f->kind) {
    case Kind::Atom:
    case Kind::Bottom:
      return 0;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Tensor: {
      unsigned r = 0;
      for (const auto& a : f->args) r = std::max(r, announcementRank(a));
      return r;
    }
    case Kind::K:
    case Kind::Forall:
      return announcementRank(f->args[0]);
    case Kind::Announce:
      return announcementRank(f->args[0]) + announcementRank(f->args[1]) + 1;
    case Kind::Kh:
      throw DomainError("announcement rank is undefined on Kh formulas");
  }
  return 0;
}

FormulaPtr rdTensorExpansion(int k, int n, const std::vector<FormulaPtr>& args) {
  // All k-element subsets of {0..n-1} in ascending lexicographic order.
  std::vector<std::vector<int>> sets;
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(pick.size()) == k) {
      sets.push_back(pick);
      return;
    }
    for (int i = from; i <= n - (k - static_cast<int>(pick.size())); ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  auto conjOf = [&](const std::vector<int>& I) {
    FormulaPtr c = args[I.back()];
    for (int i = static_cast<int>(I.size()) - 2; i >= 0; --i) c = conj(args[I[i]], c);
    return c;
  };
  FormulaPtr d = conjOf(sets.back());
  for (int i = static_cast<int>(sets.size()) - 2; i >= 0; --i) d = disj(conjOf(sets[i]), d);
  return d;
}

FormulaPtr khArrowRhs(const FormulaPtr& a, const FormulaPtr& b, const std::string& q) {
  return know(forall(q, announce(atom(q), implies(knowHow(a), knowHow(b)))));
}

FormulaPtr khBinTensorRhs(const FormulaPtr& a, const FormulaPtr& b, const std::string& q) {
  return exists(q, know(conj(announce(atom(q), knowHow(a)),
                             announce(neg(atom(q)), knowHow(b)))));
}

FormulaPtr khTensorRhs(int k, int n, const std::vector<FormulaPtr>& args,
                       const std::vector<std::string>& qs) {
  std::vector<FormulaPtr> qAtoms;
  for (const auto& q : qs) qAtoms.push_back(atom(q));
  FormulaPtr body = know(announce(qAtoms[n - 1], knowHow(args[n - 1])));
  for (int i = n - 2; i >= 0; --i)
    body = conj(know(announce(qAtoms[i], knowHow(args[i]))), body);
  body = conj(know(tensor(k, n, qAtoms)), body);
  for (int i = n - 1; i >= 0; --i) body = exists(qs[i], body);
  return body;
}

namespace {

struct Rewriter {
  FormulaPtr current;
  RewriteTrace* trace;
  std::set<std::string> avoid;

  void apply(const std::vector<int>& path, const std::string& rule, const FormulaPtr& rhs) {
    FormulaPtr lhs = subterm(current, path);
    FormulaPtr next = replaceAt(current, path, rhs);
    if (trace) trace->push_back({current, next, rule, path, lhs, rhs});
    current = next;
    for (const auto& a : allAtoms(rhs)) avoid.insert(a);
  }

  std::string fresh() {
    std::string q = freshAtom(avoid);
    avoid.insert(q);
    return q;
  }
};

bool findKind(const FormulaPtr& f, Kind k, std::vector<int>& path) {
  if (f->kind == k) return true;
  for (std::size_t i = 0; i < f->args.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (findKind(f->args[i], k, path)) return true;
    path.pop_back();
  }
  return false;
}

// Innermost announcement: one whose announced part and body are announcement-free.
bool findInnermostAnnounce(const FormulaPtr& f, std::vector<int>& path) {
  for (std::size_t i = 0; i < f->args.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (findInnermostAnnounce(f->args[i], path)) return true;
    path.pop_back();
  }
  return f->kind == Kind::Announce;
}

void khStep(Rewriter& rw, const std::vector<int>& path) {
  FormulaPtr g = subterm(rw.current, path);
  const FormulaPtr& body = g->args[0];
  switch (body->kind) {
    case Kind::Atom:
      rw.apply(path, "Khp", know(body));
      break;
    case Kind::Bottom:
      rw.apply(path, "Kh⊥", bottom());
      break;
    case Kind::And:
      rw.apply(path, "Kh∧", conj(knowHow(body->args[0]), knowHow(body->args[1])));
      break;
    case Kind::Or:
      rw.apply(path, "Kh∨", disj(knowHow(body->args[0]), knowHow(body->args[1])));
      break;
    case Kind::Implies:
      rw.apply(path, "Kh→", khArrowRhs(body->args[0], body->args[1], rw.fresh()));
      break;
    case Kind::Tensor:
      if (body->tensorK == 1 && body->tensorN == 2) {
        rw.apply(path, "Kh⊗", khBinTensorRhs(body->args[0], body->args[1], rw.fresh()));
      } else {
        std::vector<std::string> qs;
        for (int i = 0; i < body->tensorN; ++i) qs.push_back(rw.fresh());
        rw.apply(path, "Kh⊗ᵏₙ",
                 khTensorRhs(body->tensorK, body->tensorN, body->args, qs));
      }
      break;
    default:
      throw StructureError("Kh body must be propositional");
  }
}

void annEliminate(Rewriter& rw, const std::vector<int>& path) {
  FormulaPtr g = subterm(rw.current, path);
  const FormulaPtr chi = g->args[0];
  const FormulaPtr psi = g->args[1];
  auto child = [&](int i) {
    auto p = path;
    p.push_back(i);
    return p;
  };
  switch (psi->kind) {
    case Kind::Atom:
    case Kind::Bottom:
      rw.apply(path, "[]p", implies(chi, psi));
      return;
    case Kind::And:
      rw.apply(path, "[]○",
               conj(announce(chi, psi->args[0]), announce(chi, psi->args[1])));
      annEliminate(rw, child(0));
      annEliminate(rw, child(1));
      return;
    case Kind::Or:
      rw.apply(path, "[]○",
               disj(announce(chi, psi->args[0]), announce(chi, psi->args[1])));
      annEliminate(rw, child(0));
      annEliminate(rw, child(1));
      return;
    case Kind::Implies:
      rw.apply(path, "[]○",
               implies(announce(chi, psi->args[0]), announce(chi, psi->args[1])));
      annEliminate(rw, child(0));
      annEliminate(rw, child(1));
      return;
    case Kind::Tensor:
      if (psi->tensorK == 1 && psi->tensorN == 2) {
        rw.apply(path, "[]○",
                 tensor(1, 2, {announce(chi, psi->args[0]), announce(chi, psi->args[1])}));
        annEliminate(rw, child(0));
        annEliminate(rw, child(1));
      } else {
        // No announcement law for the n-ary tensor: expand the body first.
        rw.apply(child(1), "Rd⊗ᵏₙ",
                 rdTensorExpansion(psi->tensorK, psi->tensorN, psi->args));
        annEliminate(rw, path);
      }
      return;
    case Kind::K:
      rw.apply(path, "[]K", implies(chi, know(announce(chi, psi->args[0]))));
      {
        auto p = path;
        p.push_back(1);
        p.push_back(0);
        annEliminate(rw, p);
      }
      return;
    case Kind::Forall: {
      std::string p = psi->name;
      FormulaPtr inner = psi->args[0];
      if (allAtoms(chi).count(p)) {
        std::string q = rw.fresh();
        inner = substitute(inner, p, atom(q));
        rw.apply(child(1), "rename", forall(q, inner));
        p = q;
      }
      rw.apply(path, "[]∀", forall(p, announce(chi, inner)));
      annEliminate(rw, child(0));
      return;
    }
    case Kind::Announce:
      throw StructureError("announcement elimination expects an innermost redex");
    case Kind::Kh:
      throw StructureError("announcement elimination expects Kh-free input");
  }
}

FormulaPtr eliminateKhWith(Rewriter& rw) {
  std::vector<int> path;
  while (findKind(rw.current, Kind::Kh, path)) {
    khStep(rw, path);
    path.clear();
  }
  return rw.current;
}

FormulaPtr eliminateAnnouncementsWith(Rewriter& rw, RewriteTrace* macroTrace) {
  std::vector<int> path;
  while (findInnermostAnnounce(rw.current, path)) {
    FormulaPtr before = rw.current;
    FormulaPtr lhs = subterm(before, path);
    annEliminate(rw, path);
    if (macroTrace)
      macroTrace->push_back(
          {before, rw.current, "announcement", path, lhs, subterm(rw.current, path)});
    path.clear();
  }
  return rw.current;
}

}  // namespace

FormulaPtr eliminateKh(const FormulaPtr& f, RewriteTrace* trace) {
  Rewriter rw{f, trace, allAtoms(f)};
  return eliminateKhWith(rw);
}

FormulaPtr eliminateAnnouncements(const FormulaPtr& f, RewriteTrace* microTrace,
                                  RewriteTrace* macroTrace) {
  if (containsKind(f, Kind::Kh))
    throw StructureError("announcement elimination expects Kh-free input");
  Rewriter rw{f, microTrace, allAtoms(f)};
  return eliminateAnnouncementsWith(rw, macroTrace);
}

FormulaPtr toClassicalEpistemic(const FormulaPtr& f, RewriteTrace* microTrace) {
  Rewriter rw{f, microTrace, allAtoms(f)};
  eliminateKhWith(rw);
  return eliminateAnnouncementsWith(rw, nullptr);
}

namespace {

void sortUnique(std::vector<FormulaPtr>& v) {
  std::sort(v.begin(), v.end(),
            [](const FormulaPtr& a, const FormulaPtr& b) { return compare(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const FormulaPtr& a, const FormulaPtr& b) { return equal(a, b); }),
          v.end());
}

std::vector<FormulaPtr> rlRec(const FormulaPtr& a, std::size_t maxCount) {
  auto guard = [&](std::vector<FormulaPtr> v) {
    if (v.size() > maxCount)
      throw BudgetError("realization set of " + render(a) + " exceeds the budget of " +
                        std::to_string(maxCount));
    return v;
  };
  switch (a->kind) {
    case Kind::Atom:
    case Kind::Bottom:
      return {a};
    case Kind::Or: {
      auto l = rlRec(a->args[0], maxCount);
      auto r = rlRec(a->args[1], maxCount);
      l.insert(l.end(), r.begin(), r.end());
      sortUnique(l);
      return guard(std::move(l));
    }
    case Kind::And: {
      auto l = rlRec(a->args[0], maxCount);
      auto r = rlRec(a->args[1], maxCount);
      std::vector<FormulaPtr> out;
      for (const auto& x : l)
        for (const auto& y : r) out.push_back(conj(x, y));
      sortUnique(out);
      return guard(std::move(out));
    }
    case Kind::Implies: {
      auto dom = rlRec(a->args[0], maxCount);
      auto cod = rlRec(a->args[1], maxCount);
      std::vector<FormulaPtr> out;
      std::vector<std::size_t> idx(dom.size(), 0);
      for (;;) {
        // Right-nested conjunction of rho -> f(rho) in RL(antecedent) order.
        FormulaPtr c = implies(dom.back(), cod[idx.back()]);
        for (int i = static_cast<int>(dom.size()) - 2; i >= 0; --i)
          c = conj(implies(dom[i], cod[idx[i]]), c);
        out.push_back(c);
        if (out.size() > maxCount)
          throw BudgetError("realization set of " + render(a) + " exceeds the budget of " +
                            std::to_string(maxCount));
        std::size_t i = dom.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++idx[i] < cod.size()) {
            done = false;
            break;
          }
          idx[i] = 0;
        }
        if (done) break;
      }
      sortUnique(out);
      return out;
    }
    case Kind::Tensor: {
      std::vector<std::vector<FormulaPtr>> rls;
      for (const auto& arg : a->args) rls.push_back(rlRec(arg, maxCount));
      std::vector<FormulaPtr> out;
      std::vector<std::size_t> idx(rls.size(), 0);
      for (;;) {
        std::vector<FormulaPtr> picks;
        for (std::size_t i = 0; i < rls.size(); ++i) picks.push_back(rls[i][idx[i]]);
        // ~ /\_{|I|=k} ~ /\_{i in I} rho_i
        FormulaPtr expanded = rdTensorExpansion(a->tensorK, a->tensorN, picks);
        // Rebuild as the negation normal shape of the definition: collect the
        // per-subset conjunctions back from the expansion via fresh traversal.
        std::vector<FormulaPtr> conjs;
        FormulaPtr cur = expanded;
        while (cur->kind == Kind::Or) {
          conjs.push_back(cur->args[0]);
          cur = cur->args[1];
        }
        conjs.push_back(cur);
        FormulaPtr body = neg(conjs.back());
        for (int i = static_cast<int>(conjs.size()) - 2; i >= 0; --i)
          body = conj(neg(conjs[i]), body);
        out.push_back(neg(body));
        if (out.size() > maxCount)
          throw BudgetError("realization set of " + render(a) + " exceeds the budget of " +
                            std::to_string(maxCount));
        std::size_t i = rls.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++idx[i] < rls[i].size()) {
            done = false;
            break;
          }
          idx[i] = 0;
        }
        if (done) break;
      }
      sortUnique(out);
      return out;
    }
    default:
      throw StructureError("realizations are defined for propositional formulas only");
  }
}

}  // namespace

std::vector<FormulaPtr> realizations(const FormulaPtr& a, std::size_t maxCount) {
  return rlRec(a, maxCount);
}

FormulaPtr normalForm(const FormulaPtr& a, std::size_t maxCount) {
  auto rl = realizations(a, maxCount);
  FormulaPtr d = rl.back();
  for (int i = static_cast<int>(rl.size()) - 2; i >= 0; --i) d = disj(rl[i], d);
  return d;
}

namespace {

FormulaPtr simplifyTensorNode(const FormulaPtr& f) {
  int k = f->tensorK, n = f->tensorN;
  const auto& args = f->args;
  if (k == n) {  // full-threshold tensor is a plain conjunction
    FormulaPtr c = args.back();
    for (int i = n - 2; i >= 0; --i) c = conj(args[i], c);
    return c;
  }
  if (n >= 3 && k >= 2 && isTop(args.back())) {
    std::vector<FormulaPtr> rest(args.begin(), args.end() - 1);
    return tensor(k - 1, n - 1, rest);
  }
  if (n >= 3 && k <= n - 1 && args.back()->kind == Kind::Bottom) {
    std::vector<FormulaPtr> rest(args.begin(), args.end() - 1);
    return tensor(k, n - 1, rest);
  }
  if (k == 1 && n >= 3) {
    std::vector<FormulaPtr> rest(args.begin(), args.end() - 1);
    return tensor(1, 2, {tensor(1, n - 1, rest), args.back()});
  }
  return f;
}

}  // namespace

FormulaPtr simplifyGeneralTensor(const FormulaPtr& a) {
  if (!isPropositional(a))
    throw StructureError("tensor simplification is defined for propositional formulas only");
  // Innermost-first: simplify children, then reduce this node to fixpoint.
  std::vector<FormulaPtr> args;
  bool changed = false;
  for (const auto& arg : a->args) {
    auto s = simplifyGeneralTensor(arg);
    changed = changed || s != arg;
    args.push_back(s);
  }
  FormulaPtr cur =
      changed ? std::make_shared<const Formula>(a->kind, a->name, a->tensorK, a->tensorN,
                                                std::move(args))
              : a;
  while (cur->kind == Kind::Tensor) {
    FormulaPtr next = simplifyTensorNode(cur);
    if (next == cur) break;
    // A reduction may expose new opportunities in the rebuilt children.
    cur = simplifyGeneralTensor(next);
  }
  return cur;
}

}  // namespace inqkh
