#include "inqkh/models.hpp"

#include <algorithm>

#include "json.hpp"

namespace inqkh {

bool sameModel(const Model& a, const Model& b) {
  if (a.worlds != b.worlds) return false;
  // Compare total valuations: missing entries mean false everywhere.
  std::set<std::string> atoms;
  for (const auto& [p, _] : a.valuation) atoms.insert(p);
  for (const auto& [p, _] : b.valuation) atoms.insert(p);
  for (const auto& p : atoms) {
    auto ia = a.valuation.find(p);
    auto ib = b.valuation.find(p);
    std::set<uint32_t> empty;
    const auto& va = ia == a.valuation.end() ? empty : ia->second;
    const auto& vb = ib == b.valuation.end() ? empty : ib->second;
    if (va != vb) return false;
  }
  return true;
}

Model canonicalModel(const std::vector<std::string>& vocabulary, unsigned cap) {
  if (vocabulary.size() > cap)
    throw BudgetError("canonical model over " + std::to_string(vocabulary.size()) +
                      " atoms exceeds the vocabulary cap of " + std::to_string(cap));
  Model m;
  std::size_t n = vocabulary.size();
  std::size_t count = std::size_t{1} << n;
  for (const auto& p : vocabulary) m.valuation[p] = {};
  for (std::size_t step = 0; step < count; ++step) {
    // Descending masks: all-true world first, all-false last.
    std::size_t mask = count - 1 - step;
    std::string id = "w_";
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) id += vocabulary[i];
    while (std::find(m.worlds.begin(), m.worlds.end(), id) != m.worlds.end()) id += "_";
    uint32_t idx = static_cast<uint32_t>(m.worlds.size());
    m.worlds.push_back(id);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) m.valuation[vocabulary[i]].insert(idx);
  }
  return m;
}

Model restrict(const Model& m, const State& x) {
  if (x.empty()) throw DomainError("submodel undefined on the empty world set");
  for (uint32_t i : x)
    if (i >= m.worlds.size()) throw StructureError("restriction set has an unknown world");
  Model r;
  std::map<uint32_t, uint32_t> remap;
  for (uint32_t i : x) {
    remap[i] = static_cast<uint32_t>(r.worlds.size());
    r.worlds.push_back(m.worlds[i]);
  }
  for (const auto& [p, ws] : m.valuation) {
    std::set<uint32_t> nw;
    for (uint32_t i : ws)
      if (auto it = remap.find(i); it != remap.end()) nw.insert(it->second);
    r.valuation[p] = std::move(nw);
  }
  return r;
}

Model overrideAtom(const Model& m, const std::string& p, const State& u) {
  for (uint32_t i : u)
    if (i >= m.worlds.size()) throw StructureError("override set has an unknown world");
  Model r = m;
  r.valuation[p] = u;
  return r;
}

Model modelFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("model file is not valid JSON: ") + e.what());
  }
  Model m;
  if (!j.is_object() || !j.contains("worlds") || !j["worlds"].is_array())
    throw StructureError("model file needs a \"worlds\" array");
  for (const auto& w : j["worlds"]) {
    if (!w.is_string()) throw StructureError("world ids must be strings");
    if (m.worldIndex(w.get<std::string>()) >= 0)
      throw StructureError("duplicate world id '" + w.get<std::string>() + "'");
    m.worlds.push_back(w.get<std::string>());
  }
  if (m.worlds.empty()) throw StructureError("a model needs at least one world");
  auto toState = [&](const nlohmann::json& arr, const char* where) {
    State s;
    for (const auto& w : arr) {
      if (!w.is_string()) throw StructureError(std::string(where) + " entries must be world ids");
      int i = m.worldIndex(w.get<std::string>());
      if (i < 0)
        throw StructureError(std::string(where) + " mentions unknown world '" +
                             w.get<std::string>() + "'");
      s.insert(static_cast<uint32_t>(i));
    }
    return s;
  };
  if (j.contains("valuation"))
    for (const auto& [p, arr] : j["valuation"].items())
      m.valuation[p] = toState(arr, "valuation");
  if (j.contains("states"))
    for (const auto& [name, arr] : j["states"].items())
      m.namedStates[name] = toState(arr, "states");
  return m;
}

std::string modelToJson(const Model& m, const std::map<std::string, State>& states) {
  nlohmann::json j;
  j["worlds"] = m.worlds;
  j["valuation"] = nlohmann::json::object();
  for (const auto& [p, ws] : m.valuation) {
    auto arr = nlohmann::json::array();
    for (uint32_t i : ws) arr.push_back(m.worlds[i]);
    j["valuation"][p] = arr;
  }
  std::map<std::string, State> all = m.namedStates;
  for (const auto& [n, s] : states) all[n] = s;
  if (!all.empty()) {
    j["states"] = nlohmann::json::object();
    for (const auto& [n, s] : all) {
      auto arr = nlohmann::json::array();
      for (uint32_t i : s) arr.push_back(m.worlds[i]);
      j["states"][n] = arr;
    }
  }
  return j.dump(2);
}

}  // namespace inqkh
