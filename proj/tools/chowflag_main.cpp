// Command-line front end: rank profiles, fibration coefficients,
// partition counts, Schur bases, flag counting, and verification sweeps.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chowflag/algebra.hpp"
#include "chowflag/chowrank.hpp"
#include "chowflag/fq.hpp"
#include "chowflag/partitions.hpp"
#include "chowflag/schur.hpp"
#include "chowflag/verify.hpp"

namespace {

using chowflag::BigInt;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitBudgetExceeded = 3;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parseIndices(const std::string& raw) {
  std::vector<int> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("invalid integer in list: '" + item + "'");
    }
  }
  if (out.empty()) throw ValidationError("empty index list");
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) {
      throw ValidationError("indices must be strictly increasing (no duplicates, no reordering)");
    }
  }
  return out;
}

// base profile: "point", "projective:k", "symbolic", or an inline
// comma-separated rank list
struct BaseSpec {
  bool symbolic = false;
  chowflag::chowrank::RankProfile profile;
  std::string description;
};

BaseSpec parseBase(const std::string& raw) {
  BaseSpec out;
  out.description = raw;
  if (raw == "point") {
    out.profile = chowflag::chowrank::RankProfile::point();
  } else if (raw == "symbolic") {
    out.symbolic = true;
  } else if (raw.rfind("projective:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(raw.substr(11));
    } catch (const std::exception&) {
      throw ValidationError("invalid projective base: '" + raw + "'");
    }
    if (k < 1) throw ValidationError("projective base dimension must be positive");
    out.profile = chowflag::chowrank::RankProfile::projectiveSpace(k);
  } else {
    std::vector<chowflag::BigInt> ranks;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        ranks.emplace_back(item);
      } catch (const std::exception&) {
        throw ValidationError("invalid rank in inline base profile: '" + item + "'");
      }
    }
    if (ranks.empty()) throw ValidationError("empty inline base profile");
    out.profile = chowflag::chowrank::RankProfile(std::move(ranks));
  }
  return out;
}

ordered_json profileToJson(const chowflag::chowrank::RankProfile& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : p.ranks()) arr.push_back(r.str());
  return arr;
}

ordered_json distributionToJson(const chowflag::partitions::CountDistribution& d) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : d.values()) arr.push_back(v.str());
  return arr;
}

ordered_json blocksToJson(const std::vector<std::pair<int, int>>& blocks) {
  ordered_json arr = ordered_json::array();
  for (const auto& [m, A] : blocks) arr.push_back({{"maxParts", m}, {"maxPart", A}});
  return arr;
}

struct Output {
  std::string format = "table";
  ordered_json report;
  std::ostringstream table;

  void emit() const {
    if (format == "json") {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << table.str();
    }
  }
};

void printProfileTable(std::ostringstream& os, const chowflag::chowrank::RankProfile& p) {
  os << "codim  rank\n";
  for (int k = 0; k <= p.dimensionBound(); ++k) {
    os << k << "      " << p.at(k).str() << "\n";
  }
  os << "total  " << p.total().str() << "\n";
}

void printCoeffTable(std::ostringstream& os, const chowflag::partitions::CountDistribution& d) {
  os << "i      n_i\n";
  for (int i = 0; i <= d.supportBound(); ++i) {
    os << i << "      " << d.at(i).str() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow-group rank computations for flag varieties"};
  app.require_subcommand(1);

  std::string format = "table";
  long long budget = -1;
  app.add_option("--format", format, "Output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--budget", budget, "Override the enumeration budget");

  // ranks
  auto* ranksCmd = app.add_subcommand("ranks", "Rank profile of a flag variety");
  ranksCmd->fallthrough();
  int ranksN = 0;
  std::string ranksIndices, ranksBase = "point", ranksMode = "direct";
  ranksCmd->add_option("--n", ranksN, "Degree of the algebra / rank of the bundle")->required();
  ranksCmd->add_option("--indices", ranksIndices, "Comma-separated flag indices")->required();
  ranksCmd->add_option("--base", ranksBase,
                       "Base profile: point, projective:k (projective k-space), "
                       "symbolic, or an inline list");
  ranksCmd->add_option("--mode", ranksMode, "direct, first-index-one, or sb-pipeline")
      ->check(CLI::IsMember({"direct", "first-index-one", "sb-pipeline"}));

  // coeffs
  auto* coeffsCmd = app.add_subcommand("coeffs", "Fibration coefficient table");
  coeffsCmd->fallthrough();
  int coeffsN = 0, coeffsS = 0;
  std::string coeffsIndices, coeffsCase = "flag-bundle", coeffsIndices2;
  bool coeffsGcd = false;
  coeffsCmd->add_option("--n", coeffsN, "Degree")->required();
  coeffsCmd->add_option("--indices", coeffsIndices, "Comma-separated flag indices")->required();
  coeffsCmd->add_option("--case", coeffsCase,
                        "flag-bundle, first-index-one, general, or product")
      ->check(CLI::IsMember({"flag-bundle", "first-index-one", "general", "product"}));
  coeffsCmd->add_option("--s", coeffsS, "Pivot position for the general case (1-based)");
  coeffsCmd->add_option("--indices2", coeffsIndices2, "Second factor for the product case");
  coeffsCmd->add_flag("--assert-gcd", coeffsGcd,
                      "Assert the coprimality hypothesis of the general case");

  // partitions
  auto* partitionsCmd = app.add_subcommand("partitions", "Bounded partition counts");
  partitionsCmd->fallthrough();
  int pN = 0, pM = 0, pA = 0;
  bool pList = false;
  partitionsCmd->add_option("--n", pN, "Weight")->required();
  partitionsCmd->add_option("--m", pM, "Number of parts")->required();
  partitionsCmd->add_option("--A", pA, "Largest allowed part")->required();
  partitionsCmd->add_flag("--list", pList, "Also list the partitions");

  // schur-basis
  auto* schurCmd = app.add_subcommand("schur-basis", "Box partitions grouped by weight");
  schurCmd->fallthrough();
  int sN = 0, sD = 0;
  schurCmd->add_option("--n", sN, "Ambient rank")->required();
  schurCmd->add_option("--d", sD, "Subspace rank")->required();

  // verify
  auto* verifyCmd = app.add_subcommand("verify", "Run invariant suites");
  verifyCmd->fallthrough();
  std::string suite = "all";
  int vQ = 2, vNMax = 0;
  verifyCmd->add_option("--suite", suite, "partitions, schur, chow, algebra, or all");
  verifyCmd->add_option("--q", vQ, "Field order for the algebra suite");
  verifyCmd->add_option("--n-max", vNMax, "Sweep bound (0 = suite default)");

  // flags-count
  auto* flagsCmd = app.add_subcommand("flags-count", "Count F_q-rational flags");
  flagsCmd->fallthrough();
  int fN = 0, fQ = 2;
  std::string fIndices;
  flagsCmd->add_option("--n", fN, "Ambient dimension")->required();
  flagsCmd->add_option("--indices", fIndices, "Comma-separated flag indices")->required();
  flagsCmd->add_option("--q", fQ, "Field order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (app.count("--budget") > 0) {
    setenv("CHOWFLAG_ENUM_BUDGET", std::to_string(budget).c_str(), 1);
  }

  Output out;
  out.format = format;

  try {
    if (*ranksCmd) {
      const auto indices = parseIndices(ranksIndices);
      const chowflag::chowrank::FlagSpec spec{ranksN, indices};
      chowflag::chowrank::validateSpec(spec);
      const auto base = parseBase(ranksBase);

      out.report["command"] = "ranks";
      out.report["params"] = {{"n", ranksN},
                              {"indices", indices},
                              {"base", ranksBase},
                              {"mode", ranksMode}};

      if (ranksMode == "sb-pipeline") {
        if (base.symbolic) {
          throw ValidationError("the sb-pipeline mode needs a concrete base profile");
        }
        const auto profile = chowflag::chowrank::severiBrauerPipelineRanks(spec, base.profile);
        out.report["results"] = {{"profile", profileToJson(profile)},
                                 {"total", profile.total().str()}};
        out.report["provenance"] = {{"profile", "sb-exact-sequence-pipeline"}};
        printProfileTable(out.table, profile);
      } else {
        const auto coeffs = ranksMode == "first-index-one"
                                ? chowflag::chowrank::twistedCaseFirstIndexOne(spec)
                                : chowflag::chowrank::flagBundleCoefficients(spec);
        if (base.symbolic) {
          out.report["results"] = {{"coefficients", distributionToJson(coeffs.coefficients)},
                                   {"expression", "CH^k(X) = (+)_i CH^{k-i}(S)^{n_i}"}};
          out.report["provenance"] = {{"coefficients", coeffs.provenanceLabel}};
          out.table << "symbolic decomposition: CH^k(X) = (+)_i CH^{k-i}(S)^{n_i}\n";
          printCoeffTable(out.table, coeffs.coefficients);
        } else {
          const auto profile = chowflag::chowrank::pushThroughBase(coeffs, base.profile);
          out.report["results"] = {{"profile", profileToJson(profile)},
                                   {"total", profile.total().str()}};
          out.report["provenance"] = {{"profile", coeffs.provenanceLabel}};
          printProfileTable(out.table, profile);
        }
      }
      out.report["hypotheses"] = ordered_json::object();
    } else if (*coeffsCmd) {
      const auto indices = parseIndices(coeffsIndices);
      const chowflag::chowrank::FlagSpec spec{coeffsN, indices};
      chowflag::chowrank::validateSpec(spec);

      chowflag::chowrank::FibrationCoefficients coeffs;
      ordered_json hypotheses = ordered_json::object();
      if (coeffsCase == "flag-bundle") {
        coeffs = chowflag::chowrank::flagBundleCoefficients(spec);
      } else if (coeffsCase == "first-index-one") {
        coeffs = chowflag::chowrank::twistedCaseFirstIndexOne(spec);
      } else if (coeffsCase == "general") {
        if (coeffsS < 1) throw ValidationError("the general case needs --s");
        coeffs = chowflag::chowrank::twistedCaseGeneral(spec, coeffsS, coeffsGcd);
        hypotheses["gcdAsserted"] = coeffsGcd;
      } else {  // product
        if (coeffsIndices2.empty()) throw ValidationError("the product case needs --indices2");
        const chowflag::chowrank::FlagSpec spec2{coeffsN, parseIndices(coeffsIndices2)};
        coeffs = chowflag::chowrank::productFibrationCoefficients(spec, spec2);
      }

      out.report["command"] = "coeffs";
      out.report["params"] = {{"n", coeffsN},
                              {"indices", indices},
                              {"case", coeffsCase}};
      if (coeffsCase == "general") out.report["params"]["s"] = coeffsS;
      if (coeffsCase == "product") out.report["params"]["indices2"] = coeffsIndices2;
      out.report["results"] = {{"coefficients", distributionToJson(coeffs.coefficients)},
                               {"blocks", blocksToJson(coeffs.blocks)}};
      out.report["provenance"] = {{"coefficients", coeffs.provenanceLabel}};
      out.report["hypotheses"] = hypotheses;
      printCoeffTable(out.table, coeffs.coefficients);
    } else if (*partitionsCmd) {
      if (pN < 0 || pM < 1 || pA < 1) {
        throw ValidationError("need n >= 0, m >= 1, A >= 1");
      }
      const BigInt exact = chowflag::partitions::countStrict(pN, pM, pA);
      const BigInt atMost = chowflag::partitions::countAtMost(pN, pM, pA);
      out.report["command"] = "partitions";
      out.report["params"] = {{"n", pN}, {"m", pM}, {"A", pA}};
      out.report["results"] = {{"exactParts", exact.str()}, {"atMostParts", atMost.str()}};
      out.report["provenance"] = {{"exactParts", "bounded-partition-count"},
                                  {"atMostParts", "bounded-partition-count"}};
      out.report["hypotheses"] = ordered_json::object();
      out.table << "partitions of " << pN << " with exactly " << pM
                << " parts, each at most " << pA << ": " << exact.str() << "\n";
      out.table << "partitions with at most " << pM << " parts: " << atMost.str() << "\n";
      if (pList) {
        ordered_json list = ordered_json::array();
        for (const auto& p : chowflag::partitions::enumerateBounded(pN, {pM, pA})) {
          list.push_back(p.parts);
          out.table << "  (";
          for (std::size_t i = 0; i < p.parts.size(); ++i) {
            out.table << (i ? "," : "") << p.parts[i];
          }
          out.table << ")\n";
        }
        out.report["results"]["list"] = list;
      }
    } else if (*schurCmd) {
      const auto basis = chowflag::schur::enumerateBasis(sN, sD);
      out.report["command"] = "schur-basis";
      out.report["params"] = {{"n", sN}, {"d", sD}};
      ordered_json byWeight = ordered_json::array();
      out.table << "partitions in the " << sD << "x" << (sN - sD)
                << " box, by weight\n";
      for (int k = 0; k < static_cast<int>(basis.byWeight.size()); ++k) {
        ordered_json bucket = ordered_json::array();
        out.table << "weight " << k << " (" << basis.byWeight[k].size() << "):";
        for (const auto& lambda : basis.byWeight[k]) {
          std::vector<int> trimmed = lambda.parts;
          while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
          bucket.push_back(trimmed);
          out.table << " (";
          for (std::size_t i = 0; i < trimmed.size(); ++i) {
            out.table << (i ? "," : "") << trimmed[i];
          }
          out.table << ")";
        }
        out.table << "\n";
        byWeight.push_back(bucket);
      }
      out.table << "total " << basis.totalCount().str() << "\n";
      out.report["results"] = {{"byWeight", byWeight},
                               {"total", basis.totalCount().str()}};
      out.report["provenance"] = {{"byWeight", "box-partition-basis"}};
      out.report["hypotheses"] = ordered_json::object();
    } else if (*verifyCmd) {
      const auto reports = chowflag::verify::runSuites(suite, vQ, vNMax);
      bool allPassed = true;
      ordered_json suites = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.checks) {
          checks.push_back({{"name", c.name},
                            {"passed", c.passed},
                            {"cases", c.casesChecked},
                            {"counterexample", c.counterexample}});
          out.table << (c.passed ? "PASS" : "FAIL") << "  " << r.suite << "/"
                    << c.name << "  (" << c.casesChecked << " cases)";
          if (!c.passed) out.table << "  counterexample: " << c.counterexample;
          out.table << "\n";
          allPassed = allPassed && c.passed;
        }
        suites.push_back({{"suite", r.suite}, {"checks", checks}});
      }
      out.report["command"] = "verify";
      out.report["params"] = {{"suite", suite}, {"q", vQ}, {"nMax", vNMax}};
      out.report["results"] = {{"suites", suites}, {"allPassed", allPassed}};
      out.report["provenance"] = {{"suites", "invariant-sweeps"}};
      out.report["hypotheses"] = ordered_json::object();
      out.emit();
      return allPassed ? kExitOk : kExitVerificationFailed;
    } else if (*flagsCmd) {
      const auto indices = parseIndices(fIndices);
      const BigInt count = chowflag::algebra::countFlags(fN, indices, fQ);
      out.report["command"] = "flags-count";
      out.report["params"] = {{"n", fN}, {"indices", indices}, {"q", fQ}};
      out.report["results"] = {{"count", count.str()}};
      out.report["provenance"] = {{"count", "direct-flag-enumeration"}};
      out.report["hypotheses"] = ordered_json::object();
      out.table << count.str() << "\n";
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const chowflag::fq::BudgetExceeded& e) {
    std::cerr << "error: enumeration budget exceeded (budget " << e.budget << ")\n";
    return kExitBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  out.emit();
  return kExitOk;
}
