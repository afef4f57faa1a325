#include "inqkh/satisfaction.hpp"

#include <algorithm>

namespace inqkh {

namespace {

struct Ctx {
  const EvalLimits& lim;
  std::size_t overridesLeft;

  explicit Ctx(const EvalLimits& l)
      : lim(l), overridesLeft(std::size_t{1} << std::min(l.maxQuantifierBits, 62u)) {}
};

bool sat(const Model& m, uint32_t w, const FormulaPtr& f, Ctx& ctx);

State ext(const Model& m, const FormulaPtr& f, Ctx& ctx) {
  State s;
  for (uint32_t w = 0; w < m.worlds.size(); ++w)
    if (sat(m, w, f, ctx)) s.insert(w);
  return s;
}

bool sat(const Model& m, uint32_t w, const FormulaPtr& f, Ctx& ctx) {
  switch (f->kind) {
    case Kind::Atom:
      return m.atomTrueAt(f->name, w);
    case Kind::Bottom:
      return false;
    case Kind::And:
      return sat(m, w, f->args[0], ctx) && sat(m, w, f->args[1], ctx);
    case Kind::Or:
      return sat(m, w, f->args[0], ctx) || sat(m, w, f->args[1], ctx);
    case Kind::Implies:
      return !sat(m, w, f->args[0], ctx) || sat(m, w, f->args[1], ctx);
    case Kind::Tensor: {
      // Outside Kh the tensor is "at least k arguments true".
      int hits = 0;
      for (const auto& a : f->args)
        if (sat(m, w, a, ctx)) ++hits;
      return hits >= f->tensorK;
    }
    case Kind::K:
      for (uint32_t v = 0; v < m.worlds.size(); ++v)
        if (!sat(m, v, f->args[0], ctx)) return false;
      return true;
    case Kind::Kh:
      if (ctx.lim.khBackend == KhBackend::Resolution)
        return uniformResolution(m, f->args[0], ctx.lim.resolutionBudget).has_value();
      return supports(m, m.fullState(), f->args[0], ctx.lim.supportBudget);
    case Kind::Forall: {
      std::size_t n = m.worlds.size();
      if (n >= 62)
        throw BudgetError("propositional quantifier over " + std::to_string(n) + " worlds");
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        if (ctx.overridesLeft == 0)
          throw BudgetError("quantifier enumeration exceeded the configured budget");
        --ctx.overridesLeft;
        State u;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (std::size_t{1} << i)) u.insert(static_cast<uint32_t>(i));
        if (!sat(overrideAtom(m, f->name, u), w, f->args[0], ctx)) return false;
      }
      return true;
    }
    case Kind::Announce: {
      if (!sat(m, w, f->args[0], ctx)) return true;
      State x = ext(m, f->args[0], ctx);
      Model sub = restrict(m, x);
      int nw = sub.worldIndex(m.worlds[w]);
      if (nw < 0) throw StructureError("announced world lost its identity");  // unreachable
      return sat(sub, static_cast<uint32_t>(nw), f->args[1], ctx);
    }
  }
  return false;
}

}  // namespace

bool satisfies(const Model& m, uint32_t w, const FormulaPtr& f, const EvalLimits& lim) {
  if (w >= m.worlds.size()) throw DomainError("unknown world index");
  Ctx ctx(lim);
  return sat(m, w, f, ctx);
}

bool holdsGlobally(const Model& m, const FormulaPtr& f, const EvalLimits& lim) {
  Ctx ctx(lim);
  for (uint32_t w = 0; w < m.worlds.size(); ++w)
    if (!sat(m, w, f, ctx)) return false;
  return true;
}

State extension(const Model& m, const FormulaPtr& f, const EvalLimits& lim) {
  Ctx ctx(lim);
  return ext(m, f, ctx);
}

}  // namespace inqkh
