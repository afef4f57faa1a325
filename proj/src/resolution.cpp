#include "inqkh/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace inqkh {

Resolution Resolution::atom(std::string n) {
  Resolution r;
  r.tag = Tag::Atom;
  r.name = std::move(n);
  return r;
}
Resolution Resolution::bottomToken() {
  Resolution r;
  r.tag = Tag::Bottom;
  return r;
}
Resolution Resolution::tagged(int side, Resolution inner) {
  Resolution r;
  r.tag = Tag::Tagged;
  r.side = side;
  r.items.push_back(std::move(inner));
  return r;
}
Resolution Resolution::tuple(std::vector<Resolution> items) {
  Resolution r;
  r.tag = Tag::Tuple;
  r.items = std::move(items);
  return r;
}
Resolution Resolution::func(std::vector<std::pair<Resolution, Resolution>> graph) {
  Resolution r;
  r.tag = Tag::Func;
  r.graph = std::move(graph);
  return r;
}

int compare(const Resolution& a, const Resolution& b) {
  if (a.tag != b.tag) return a.tag < b.tag ? -1 : 1;
  if (int c = a.name.compare(b.name)) return c < 0 ? -1 : 1;
  if (a.side != b.side) return a.side < b.side ? -1 : 1;
  if (a.items.size() != b.items.size()) return a.items.size() < b.items.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.items.size(); ++i)
    if (int c = compare(a.items[i], b.items[i])) return c;
  if (a.graph.size() != b.graph.size()) return a.graph.size() < b.graph.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.graph.size(); ++i) {
    if (int c = compare(a.graph[i].first, b.graph[i].first)) return c;
    if (int c = compare(a.graph[i].second, b.graph[i].second)) return c;
  }
  return 0;
}

bool operator==(const Resolution& a, const Resolution& b) { return compare(a, b) == 0; }
bool operator<(const Resolution& a, const Resolution& b) { return compare(a, b) < 0; }

std::string toText(const Resolution& r) {
  std::ostringstream os;
  switch (r.tag) {
    case Resolution::Tag::Atom:
      os << r.name;
      break;
    case Resolution::Tag::Bottom:
      os << "bot!";
      break;
    case Resolution::Tag::Tagged:
      os << (r.side == 0 ? "inl(" : "inr(") << toText(r.items[0]) << ')';
      break;
    case Resolution::Tag::Tuple:
      os << (r.items.size() == 2 ? "pair(" : "tuple(");
      for (std::size_t i = 0; i < r.items.size(); ++i) {
        if (i) os << ',';
        os << toText(r.items[i]);
      }
      os << ')';
      break;
    case Resolution::Tag::Func:
      os << "fn{";
      for (std::size_t i = 0; i < r.graph.size(); ++i) {
        if (i) os << ',';
        os << toText(r.graph[i].first) << "=>" << toText(r.graph[i].second);
      }
      os << '}';
      break;
  }
  return os.str();
}

std::size_t resolutionSpaceSize(const FormulaPtr& a, std::size_t limit) {
  auto sat = [&](std::size_t x) { return x > limit ? limit + 1 : x; };
  switch (a->kind) {
    case Kind::Atom:
    case Kind::Bottom:
      return 1;
    case Kind::Or:
      return sat(resolutionSpaceSize(a->args[0], limit) + resolutionSpaceSize(a->args[1], limit));
    case Kind::And:
    case Kind::Tensor: {
      std::size_t r = 1;
      for (const auto& arg : a->args) {
        std::size_t s = resolutionSpaceSize(arg, limit);
        if (s != 0 && r > (limit + 1) / s) return limit + 1;
        r = sat(r * s);
      }
      return r;
    }
    case Kind::Implies: {
      std::size_t dom = resolutionSpaceSize(a->args[0], limit);
      std::size_t cod = resolutionSpaceSize(a->args[1], limit);
      std::size_t r = 1;
      for (std::size_t i = 0; i < dom; ++i) {
        if (cod != 0 && r > (limit + 1) / cod) return limit + 1;
        r *= cod;
      }
      return sat(r);
    }
    default:
      throw StructureError("resolution spaces are defined for propositional formulas only");
  }
}

namespace {

void checkBudget(const FormulaPtr& a, const Budget& b) {
  // Report the innermost offender for a readable error.
  for (const auto& arg : a->args)
    if (isPropositional(arg)) checkBudget(arg, b);
  std::size_t s = resolutionSpaceSize(a, b.maxSpaceSize);
  if (s > b.maxSpaceSize)
    throw BudgetError("resolution space of " + render(a) + " exceeds the budget of " +
                      std::to_string(b.maxSpaceSize));
}

std::vector<Resolution> spaceRec(const FormulaPtr& a) {
  switch (a->kind) {
    case Kind::Atom:
      return {Resolution::atom(a->name)};
    case Kind::Bottom:
      return {Resolution::bottomToken()};
    case Kind::Or: {
      std::vector<Resolution> out;
      for (auto& x : spaceRec(a->args[0])) out.push_back(Resolution::tagged(0, std::move(x)));
      for (auto& x : spaceRec(a->args[1])) out.push_back(Resolution::tagged(1, std::move(x)));
      return out;
    }
    case Kind::And:
    case Kind::Tensor: {
      std::vector<std::vector<Resolution>> spaces;
      for (const auto& arg : a->args) spaces.push_back(spaceRec(arg));
      std::vector<Resolution> out;
      std::vector<std::size_t> idx(spaces.size(), 0);
      for (;;) {
        std::vector<Resolution> items;
        for (std::size_t i = 0; i < spaces.size(); ++i) items.push_back(spaces[i][idx[i]]);
        out.push_back(Resolution::tuple(std::move(items)));
        std::size_t i = spaces.size();
        while (i > 0) {
          --i;
          if (++idx[i] < spaces[i].size()) break;
          idx[i] = 0;
          if (i == 0) return out;
        }
      }
    }
    case Kind::Implies: {
      auto dom = spaceRec(a->args[0]);
      auto cod = spaceRec(a->args[1]);
      std::vector<Resolution> out;
      std::vector<std::size_t> idx(dom.size(), 0);
      for (;;) {
        std::vector<std::pair<Resolution, Resolution>> graph;
        for (std::size_t i = 0; i < dom.size(); ++i) graph.emplace_back(dom[i], cod[idx[i]]);
        out.push_back(Resolution::func(std::move(graph)));
        std::size_t i = dom.size();
        while (i > 0) {
          --i;
          if (++idx[i] < cod.size()) break;
          idx[i] = 0;
          if (i == 0) return out;
        }
      }
    }
    default:
      throw StructureError("resolution spaces are defined for propositional formulas only");
  }
}

std::vector<Resolution> actualRec(const Model& m, uint32_t w, const FormulaPtr& a) {
  switch (a->kind) {
    case Kind::Atom:
      if (m.atomTrueAt(a->name, w)) return {Resolution::atom(a->name)};
      return {};
    case Kind::Bottom:
      return {};
    case Kind::Or: {
      std::vector<Resolution> out;
      for (auto& x : actualRec(m, w, a->args[0])) out.push_back(Resolution::tagged(0, std::move(x)));
      for (auto& x : actualRec(m, w, a->args[1])) out.push_back(Resolution::tagged(1, std::move(x)));
      return out;
    }
    case Kind::And: {
      auto l = actualRec(m, w, a->args[0]);
      auto r = actualRec(m, w, a->args[1]);
      std::vector<Resolution> out;
      for (const auto& x : l)
        for (const auto& y : r) out.push_back(Resolution::tuple({x, y}));
      return out;
    }
    case Kind::Tensor: {
      // Tuples over the full spaces with at least k coordinates actual.
      std::vector<std::vector<Resolution>> spaces;
      std::vector<std::vector<char>> actual;  // per space, flag per element
      for (const auto& arg : a->args) {
        auto sp = spaceRec(arg);
        auto ac = actualRec(m, w, arg);
        std::vector<char> fl(sp.size(), 0);
        for (std::size_t i = 0; i < sp.size(); ++i)
          fl[i] = std::binary_search(ac.begin(), ac.end(), sp[i]) ? 1 : 0;
        spaces.push_back(std::move(sp));
        actual.push_back(std::move(fl));
      }
      std::vector<Resolution> out;
      std::vector<std::size_t> idx(spaces.size(), 0);
      for (;;) {
        int hits = 0;
        for (std::size_t i = 0; i < spaces.size(); ++i) hits += actual[i][idx[i]];
        if (hits >= a->tensorK) {
          std::vector<Resolution> items;
          for (std::size_t i = 0; i < spaces.size(); ++i) items.push_back(spaces[i][idx[i]]);
          out.push_back(Resolution::tuple(std::move(items)));
        }
        std::size_t i = spaces.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++idx[i] < spaces[i].size()) {
            done = false;
            break;
          }
          idx[i] = 0;
        }
        if (done) return out;
      }
    }
    case Kind::Implies: {
      // Functions mapping every actual antecedent resolution to an actual
      // consequent resolution.
      auto all = spaceRec(a);
      auto actDom = actualRec(m, w, a->args[0]);
      auto actCod = actualRec(m, w, a->args[1]);
      std::vector<Resolution> out;
      for (auto& f : all) {
        bool ok = true;
        for (const auto& [x, y] : f.graph)
          if (std::binary_search(actDom.begin(), actDom.end(), x) &&
              !std::binary_search(actCod.begin(), actCod.end(), y)) {
            ok = false;
            break;
          }
        if (ok) out.push_back(std::move(f));
      }
      return out;
    }
    default:
      throw StructureError("resolutions are defined for propositional formulas only");
  }
}

}  // namespace

std::vector<Resolution> resolutionSpace(const FormulaPtr& a, const Budget& b) {
  if (!isPropositional(a))
    throw StructureError("resolution spaces are defined for propositional formulas only");
  checkBudget(a, b);
  return spaceRec(a);
}

std::vector<Resolution> resolutionsAt(const Model& m, uint32_t w, const FormulaPtr& a,
                                      const Budget& b) {
  if (w >= m.worlds.size()) throw DomainError("unknown world index");
  if (!isPropositional(a))
    throw StructureError("resolutions are defined for propositional formulas only");
  checkBudget(a, b);
  return actualRec(m, w, a);
}

std::optional<Resolution> uniformResolution(const Model& m, const FormulaPtr& a,
                                            const Budget& b) {
  if (!isPropositional(a))
    throw StructureError("resolutions are defined for propositional formulas only");
  checkBudget(a, b);
  std::vector<Resolution> common = actualRec(m, 0, a);
  for (uint32_t w = 1; w < m.worlds.size() && !common.empty(); ++w) {
    auto rw = actualRec(m, w, a);
    std::vector<Resolution> next;
    std::set_intersection(common.begin(), common.end(), rw.begin(), rw.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  if (common.empty()) return std::nullopt;
  return common.front();
}

}  // namespace inqkh
