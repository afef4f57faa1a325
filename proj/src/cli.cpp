#include "inqkh/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "inqkh/decide.hpp"
#include "inqkh/models.hpp"
#include "inqkh/proofs.hpp"
#include "inqkh/resolution.hpp"
#include "inqkh/rewrite.hpp"
#include "inqkh/satisfaction.hpp"
#include "inqkh/support.hpp"
#include "inqkh/syntax.hpp"
#include "json.hpp"

namespace inqkh {

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json stateJson(const Model& m, const State& s) {
  auto arr = nlohmann::json::array();
  for (uint32_t i : s) arr.push_back(m.worlds[i]);
  return arr;
}

nlohmann::json verdictJson(const Verdict& v) {
  nlohmann::json j;
  switch (v.outcome) {
    case Verdict::Outcome::Valid:
      j["verdict"] = "valid";
      break;
    case Verdict::Outcome::NoCounterexampleUpTo:
      j["verdict"] = "no-counterexample-up-to";
      j["bound"] = v.bound;
      break;
    case Verdict::Outcome::CounterexamplePointed:
      j["verdict"] = "counterexample";
      j["model"] = nlohmann::json::parse(modelToJson(v.model));
      j["world"] = v.model.worlds[v.world];
      break;
    case Verdict::Outcome::CounterexampleState:
      j["verdict"] = "counterexample";
      j["model"] = nlohmann::json::parse(modelToJson(v.model));
      j["state"] = stateJson(v.model, v.state);
      j["minimalState"] = stateJson(v.model, v.minimalState);
      break;
  }
  return j;
}

void printVerdict(const Verdict& v, bool json, std::ostream& out) {
  if (json) {
    out << verdictJson(v).dump(2) << '\n';
    return;
  }
  switch (v.outcome) {
    case Verdict::Outcome::Valid:
      out << "valid\n";
      break;
    case Verdict::Outcome::NoCounterexampleUpTo:
      out << "no counterexample up to " << v.bound << " worlds\n";
      break;
    case Verdict::Outcome::CounterexamplePointed:
      out << "counterexample at world " << v.model.worlds[v.world] << "\n"
          << modelToJson(v.model) << '\n';
      break;
    case Verdict::Outcome::CounterexampleState: {
      out << "counterexample state";
      for (uint32_t i : v.minimalState) out << ' ' << v.model.worlds[i];
      out << '\n' << modelToJson(v.model, {{"counterexample", v.minimalState}}) << '\n';
      break;
    }
  }
}

std::vector<FormulaPtr> parseList(const std::string& text) {
  std::vector<FormulaPtr> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    std::string part =
        end == std::string::npos ? text.substr(start) : text.substr(start, end - start);
    if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(parse(part));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

int runCommand(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"inquisitive/epistemic logic toolkit"};
  app.require_subcommand(1);

  std::string formulaText, secondText, modelFile, stateName, worldId, traceFile, proofFile,
      backend = "support", gammaText;
  bool json = false, inqExact = false, sugar = false;
  unsigned maxWorlds = 3, depth = 2;

  EvalLimits lim;
  if (const char* env = std::getenv("INQKH_BUDGET")) {
    char* endp = nullptr;
    unsigned long v = std::strtoul(env, &endp, 10);
    if (endp && *endp == '\0' && v > 0) lim.resolutionBudget.maxSpaceSize = v;
  }

  auto* fmt = app.add_subcommand("fmt", "parse and pretty-print a formula");
  fmt->add_option("-f,--formula", formulaText)->required();
  fmt->add_flag("--sugar", sugar, "print derived forms (~, top) where possible");

  auto* eval = app.add_subcommand("eval", "evaluate a formula on a model");
  eval->add_option("--model", modelFile)->required();
  eval->add_option("--state", stateName);
  eval->add_option("--world", worldId);
  eval->add_option("-f,--formula", formulaText)->required();
  eval->add_option("--kh-backend", backend)->check(CLI::IsMember({"support", "resolution"}));
  eval->add_flag("--json", json);

  auto* reduce = app.add_subcommand("reduce", "rewrite to classical epistemic form");
  reduce->add_option("-f,--formula", formulaText)->required();
  reduce->add_option("--trace", traceFile);

  auto* nf = app.add_subcommand("nf", "realization normal form");
  nf->add_option("-f,--formula", formulaText)->required();

  auto* simplify = app.add_subcommand("simplify", "apply the tensor reduction laws");
  simplify->add_option("-f,--formula", formulaText)->required();

  auto* valid = app.add_subcommand("valid", "validity check");
  valid->add_option("-f,--formula", formulaText)->required();
  valid->add_option("--max-worlds", maxWorlds);
  valid->add_flag("--inq", inqExact, "exact canonical-model decision (propositional only)");
  valid->add_flag("--json", json);

  auto* entail = app.add_subcommand("entail", "exact propositional entailment");
  entail->add_option("-g,--premises", gammaText, "semicolon-separated premises")->required();
  entail->add_option("-f,--formula", formulaText)->required();
  entail->add_flag("--json", json);

  auto* equiv = app.add_subcommand("equiv", "relativized equivalence on a state");
  equiv->add_option("--model", modelFile)->required();
  equiv->add_option("--state", stateName)->required();
  equiv->add_option("-f,--first", formulaText)->required();
  equiv->add_option("-g,--second", secondText)->required();
  equiv->add_flag("--json", json);

  auto* check = app.add_subcommand("check", "check a proof script");
  check->add_option("proof", proofFile, "proof script JSON file")->required();
  check->add_flag("--json", json);

  auto* t23 = app.add_subcommand("t23", "uniform-definability counterexample report");
  t23->add_option("--depth", depth);
  t23->add_flag("--json", json);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*fmt) {
      out << render(parse(formulaText), {sugar}) << '\n';
      return 0;
    }
    if (*eval) {
      Model m = modelFromJson(readFile(modelFile));
      auto f = parse(formulaText);
      lim.khBackend = backend == "resolution" ? KhBackend::Resolution : KhBackend::Support;
      bool result = false;
      if (!stateName.empty()) {
        auto it = m.namedStates.find(stateName);
        if (it == m.namedStates.end()) throw DomainError("unknown state '" + stateName + "'");
        result = supports(m, it->second, f, lim.supportBudget);
      } else if (!worldId.empty()) {
        int w = m.worldIndex(worldId);
        if (w < 0) throw DomainError("unknown world '" + worldId + "'");
        result = satisfies(m, static_cast<uint32_t>(w), f, lim);
      } else {
        err << "eval needs --state or --world\n";
        return 2;
      }
      if (json)
        out << nlohmann::json{{"holds", result}}.dump(2) << '\n';
      else
        out << (result ? "supported\n" : "not supported\n");
      return result ? 0 : 1;
    }
    if (*reduce) {
      RewriteTrace trace;
      auto f = parse(formulaText);
      auto g = toClassicalEpistemic(f, &trace);
      if (!traceFile.empty()) {
        std::ofstream tf(traceFile);
        if (!tf) throw DomainError("cannot write trace file: " + traceFile);
        tf << traceToText(trace);
      }
      out << render(g) << '\n';
      return 0;
    }
    if (*nf) {
      out << render(normalForm(parse(formulaText))) << '\n';
      return 0;
    }
    if (*simplify) {
      out << render(simplifyGeneralTensor(parse(formulaText))) << '\n';
      return 0;
    }
    if (*valid) {
      auto f = parse(formulaText);
      Verdict v = inqExact ? validInq(f) : validBounded(f, maxWorlds, lim);
      printVerdict(v, json, out);
      return v.positive() ? 0 : 1;
    }
    if (*entail) {
      Verdict v = entailsInq(parseList(gammaText), parse(formulaText));
      printVerdict(v, json, out);
      return v.positive() ? 0 : 1;
    }
    if (*equiv) {
      Model m = modelFromJson(readFile(modelFile));
      auto it = m.namedStates.find(stateName);
      if (it == m.namedStates.end()) throw DomainError("unknown state '" + stateName + "'");
      State witness;
      bool same = relativizedEquivalentWitness(m, it->second, parse(formulaText),
                                               parse(secondText), witness);
      if (json) {
        nlohmann::json j{{"equivalent", same}};
        if (!same) j["witness"] = stateJson(m, witness);
        out << j.dump(2) << '\n';
      } else if (same) {
        out << "equivalent\n";
      } else {
        out << "inequivalent; witness substate";
        for (uint32_t i : witness) out << ' ' << m.worlds[i];
        out << '\n';
      }
      return same ? 0 : 1;
    }
    if (*check) {
      ProofScript s = proofFromJson(readFile(proofFile));
      CheckResult r = checkProof(s);
      if (json) {
        nlohmann::json j{{"accepted", r.accepted}};
        if (!r.accepted) {
          j["line"] = r.line;
          j["reason"] = r.reason;
          j["structural"] = r.structural;
        }
        out << j.dump(2) << '\n';
      } else if (r.accepted) {
        out << "accepted\n";
      } else {
        out << "rejected at line " << r.line << ": " << r.reason << '\n';
      }
      return r.accepted ? 0 : 1;
    }
    if (*t23) {
      T23Report rep = t23Report(depth);
      bool ok = rep.allInequivalent() && rep.allClassified();
      if (json) {
        nlohmann::json j;
        j["model"] = nlohmann::json::parse(modelToJson(rep.model));
        j["psi"] = render(rep.psi);
        j["target"] = render(rep.target);
        j["checks"] = nlohmann::json::array();
        for (const auto& c : rep.checks) {
          nlohmann::json cj{{"class", c.className}, {"equivalent", c.equivalent}};
          if (!c.equivalent) cj["witness"] = stateJson(rep.model, c.witness);
          j["checks"].push_back(cj);
        }
        j["contextsEnumerated"] = rep.contexts.size();
        j["allClassified"] = rep.allClassified();
        out << j.dump(2) << '\n';
      } else {
        out << "target: " << render(rep.target) << '\n';
        for (const auto& c : rep.checks) {
          out << "  vs " << c.className << ": "
              << (c.equivalent ? "equivalent" : "inequivalent, witness");
          if (!c.equivalent)
            for (uint32_t i : c.witness) out << ' ' << rep.model.worlds[i];
          out << '\n';
        }
        out << rep.contexts.size() << " contexts enumerated; "
            << (rep.allClassified() ? "all" : "NOT all")
            << " classified into the four classes\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace inqkh
