#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "uqcentral/verification.hpp"

using namespace uqc;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  int N = 1;
  int m = 1;
  int k = 0;
  std::string rep = "tensor:1";
  std::string format = "text";
  std::string weightConvention = "lowest";
  std::string lambda;
  std::string out;
  bool verbose = false;
};

Representation buildRep(const JobConfig& cfg) {
  const std::string& r = cfg.rep;
  const auto colon = r.find(':');
  const std::string kind = r.substr(0, colon);
  int degree = cfg.k > 0 ? cfg.k : cfg.m;
  if (colon != std::string::npos) {
    try {
      degree = std::stoi(r.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("bad --rep degree: " + r);
    }
  }
  if (degree < 1) throw UsageError("representation degree must be >= 1");
  if (kind == "tensor") return tensorPowerRep(cfg.N, degree);
  if (kind == "sym") return symmetricPowerRep(cfg.N, degree);
  if (kind == "exrep") return exRep(cfg.N, degree);
  if (kind == "trivial") return trivialRep(cfg.N);
  throw UsageError("unknown --rep " + r + " (expected tensor:k, sym, exrep)");
}

WeightVector parseLambda(const std::string& s, int N) {
  WeightVector w;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed --lambda entry '" + item + "'");
    }
  }
  if (static_cast<int>(w.size()) != N + 1) throw UsageError("--lambda needs N+1 comma-separated integers");
  return w;
}

std::string formatScalar(const QScalar& x, Format f) {
  switch (f) {
    case Format::Text: return toText(x);
    case Format::Latex: return toLatex(x);
    case Format::Json: return toJson(x).dump();
  }
  return "";
}

int cmdCentral(const JobConfig& cfg, std::ostream& out) {
  const Format f = parseFormat(cfg.format);
  out << serialize(centralElement(cfg.m, cfg.N), f) << "\n";
  return kOk;
}

std::vector<VerificationReport> runVerify(const std::string& what, const JobConfig& cfg) {
  std::vector<VerificationReport> rs;
  if (what == "centrality") {
    const Representation W = buildRep(cfg);
    rs.push_back(checkCentrality(evaluateCentral(centralElement(cfg.m, cfg.N), W), W,
                                 Json{{"m", cfg.m}, {"N", cfg.N}, {"rep", W.space.describe()}}));
  } else if (what == "scalar") {
    const Representation W = buildRep(cfg);
    VerificationReport r{"scalar", Json{{"m", cfg.m}, {"N", cfg.N}, {"rep", W.space.describe()}}};
    try {
      const QScalar c = checkScalar(evaluateCentral(centralElement(cfg.m, cfg.N), W));
      r.info = Json{{"scalar", toText(c)}, {"latex", toLatex(c)}, {"exact", toJson(c)}};
    } catch (const NotScalar& e) {
      r.pass = false;
      r.witness = Json{{"row", e.witness.row}, {"col", e.witness.col}, {"value", toText(e.witness.value)}};
    }
    rs.push_back(r);
  } else if (what == "oracle") {
    rs.push_back(oracleCheck(buildRep(cfg), cfg.m));
  } else if (what == "relations") {
    const int k = cfg.k > 0 ? cfg.k : 2;
    rs = relationSuite(cfg.N, k);
    for (auto& r : wellDefinednessSuite(cfg.m, cfg.N, k)) rs.push_back(std::move(r));
  } else if (what == "intertwining") {
    rs = intertwiningSuite(cfg.m, cfg.N);
  } else if (what == "basis") {
    rs = basisSuite(cfg.m, cfg.N);
    for (auto& r : coreExamples()) rs.push_back(std::move(r));
  } else {
    throw UsageError("unknown verify target " + what);
  }
  sortReports(rs);
  return rs;
}

int cmdVerify(const std::string& what, const JobConfig& cfg, std::ostream& out) {
  const auto rs = runVerify(what, cfg);
  for (const auto& r : rs) {
    if (!cfg.verbose && r.pass && what != "scalar") {
      VerificationReport brief = r;
      brief.info = Json();
      out << toJsonLine(brief) << "\n";
    } else {
      out << toJsonLine(r) << "\n";
    }
  }
  if (cfg.verbose) std::cerr << rs.size() << " checks, " << (allPass(rs) ? "all passed" : "failures present") << "\n";
  return allPass(rs) ? kOk : kFailed;
}

int cmdEigenvalue(const JobConfig& cfg, std::ostream& out) {
  const Format f = parseFormat(cfg.format);
  WeightVector highest(cfg.N + 1, 0);
  if (!cfg.lambda.empty()) {
    highest = parseLambda(cfg.lambda, cfg.N);
  } else if (cfg.k > 0) {
    highest[0] = cfg.k;
  }
  const WeightConvention c = parseWeightConvention(cfg.weightConvention);
  out << formatScalar(eigenvalueFormula(cfg.m, cfg.N, conventionWeight(highest, c)), f) << "\n";
  return kOk;
}

void addCommon(CLI::App* app, JobConfig& cfg) {
  app->add_option("--N", cfg.N, "rank: U_q(gl(N+1))")->check(CLI::Range(1, 64));
  app->add_option("--m", cfg.m, "degree of the central element")->check(CLI::Range(1, 64));
  app->add_option("--k", cfg.k, "tensor or symmetric degree")->check(CLI::Range(1, 64));
  app->add_option("--rep", cfg.rep, "tensor:k | sym[:k] | exrep[:k] | trivial");
  app->add_option("--format", cfg.format, "text | latex | json")->check(CLI::IsMember({"text", "latex", "json"}));
  app->add_option("--weight-convention", cfg.weightConvention, "highest | lowest")
      ->check(CLI::IsMember({"highest", "lowest"}));
  app->add_option("--out", cfg.out, "write output to this file");
  app->add_flag("--verbose", cfg.verbose, "full reports and a summary on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact central elements of U_q(gl(N+1))"};
  app.set_config("--config", "", "TOML/INI file whose keys mirror the flags");
  app.require_subcommand(1);
  JobConfig cfg;

  CLI::App* central = app.add_subcommand("central", "print the closed-form central element C_m");
  addCommon(central, cfg);

  CLI::App* verify = app.add_subcommand("verify", "run a verification family; JSON lines on stdout");
  std::string what;
  verify->add_option("what", what, "centrality | scalar | oracle | relations | intertwining | basis")
      ->required()
      ->check(CLI::IsMember({"centrality", "scalar", "oracle", "relations", "intertwining", "basis"}));
  addCommon(verify, cfg);

  CLI::App* eigen = app.add_subcommand("eigenvalue", "eigenvalue of C_m on the module with highest weight Lambda");
  eigen->add_option("--lambda", cfg.lambda, "comma-separated highest weight, N+1 integers");
  addCommon(eigen, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "cannot open " << cfg.out << "\n";
      return kUsage;
    }
  }
  std::ostream& out = cfg.out.empty() ? std::cout : file;
  try {
    if (central->parsed()) return cmdCentral(cfg, out);
    if (verify->parsed()) return cmdVerify(what, cfg, out);
    return cmdEigenvalue(cfg, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}
