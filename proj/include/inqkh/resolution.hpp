#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "inqkh/models.hpp"
#include "inqkh/syntax.hpp"

namespace inqkh {

// A potential resolution: the BHK-style witness shape of a propositional
// formula. Functions are explicit finite maps whose graph is kept sorted by
// the canonical order of the domain space.
struct Resolution {
  enum class Tag { Atom, Bottom, Tagged, Tuple, Func };
  Tag tag = Tag::Bottom;
  std::string name;                   // Atom
  int side = 0;                       // Tagged: 0 = left, 1 = right
  std::vector<Resolution> items;      // Tagged (1 item), Tuple
  std::vector<std::pair<Resolution, Resolution>> graph;  // Func

  static Resolution atom(std::string n);
  static Resolution bottomToken();
  static Resolution tagged(int side, Resolution inner);
  static Resolution tuple(std::vector<Resolution> items);
  static Resolution func(std::vector<std::pair<Resolution, Resolution>> graph);
};

// Structural total order; ties resolution enumeration to a canonical sequence.
int compare(const Resolution& a, const Resolution& b);
bool operator==(const Resolution& a, const Resolution& b);
bool operator<(const Resolution& a, const Resolution& b);

// Canonical text form: p, bot!, inl(x), inr(x), pair(a,b), tuple(a,b,c),
// fn{d=>v,...} with the graph in domain order.
std::string toText(const Resolution& r);

struct Budget {
  std::size_t maxSpaceSize = 1'000'000;
};

// |S(a)|, saturating at limit+1 to avoid overflow.
std::size_t resolutionSpaceSize(const FormulaPtr& a, std::size_t limit);

// S(a) in canonical ascending order. Throws BudgetError naming the first
// subformula whose space exceeds the budget.
std::vector<Resolution> resolutionSpace(const FormulaPtr& a, const Budget& b = {});

// R(w,a): the actual resolutions at world w, a subset of S(a), sorted.
std::vector<Resolution> resolutionsAt(const Model& m, uint32_t w, const FormulaPtr& a,
                                      const Budget& b = {});

// Least element of the intersection of R(w,a) over all worlds, if any;
// presence is exactly model-level Kh a.
std::optional<Resolution> uniformResolution(const Model& m, const FormulaPtr& a,
                                            const Budget& b = {});

}  // namespace inqkh
