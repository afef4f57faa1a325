#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "inqkh/errors.hpp"

namespace inqkh {

// A state is a set of world indices into Model::worlds.
using State = std::set<uint32_t>;

// Finite epistemic model: nonempty ordered world list plus a valuation.
// Atoms absent from the valuation are false everywhere. namedStates carries
// states loaded from a model file for CLI lookup; it has no semantic weight.
struct Model {
  std::vector<std::string> worlds;
  std::map<std::string, std::set<uint32_t>> valuation;
  std::map<std::string, std::set<uint32_t>> namedStates;

  State fullState() const {
    State s;
    for (uint32_t i = 0; i < worlds.size(); ++i) s.insert(i);
    return s;
  }
  bool atomTrueAt(const std::string& p, uint32_t w) const {
    auto it = valuation.find(p);
    return it != valuation.end() && it->second.count(w) > 0;
  }
  int worldIndex(const std::string& id) const {  // -1 if absent
    for (uint32_t i = 0; i < worlds.size(); ++i)
      if (worlds[i] == id) return static_cast<int>(i);
    return -1;
  }
};

bool sameModel(const Model& a, const Model& b);

// One world per valuation class over the vocabulary, in descending-mask order
// (all-true first). World ids encode the class: w_pq, w_p, w_q, w_.
// Throws BudgetError when the vocabulary exceeds the cap.
Model canonicalModel(const std::vector<std::string>& vocabulary, unsigned cap = 16);

// Submodel on x. Throws DomainError on empty x, StructureError if x has
// indices outside the model.
Model restrict(const Model& m, const State& x);

// Valuation override M[p -> u]. Throws StructureError if u has bad indices.
Model overrideAtom(const Model& m, const std::string& p, const State& u);

// JSON model files: {"worlds": [...], "valuation": {"p": [...]}, "states": {...}}.
Model modelFromJson(const std::string& text);
std::string modelToJson(const Model& m, const std::map<std::string, State>& states = {});

}  // namespace inqkh
