// command-line front end: parse an input document, dispatch the computation,
// emit a JSON or markdown report.
// exit codes: 0 success, 2 input error, 3 computation error, 4 invariant violation
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "logres/io.hpp"

using namespace logres;

namespace {

Json loadInput(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
}

void writeOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"value semigroups, dual value sets, residue modules and Poincare "
               "polynomials of reduced curve singularity germs"};
  app.require_subcommand(1);

  std::string input, output, outputFormat = "json", verify = "cross-check";
  int truncation = 0, dmax = 128, threads = 1;
  long seed = 0;
  auto addCommon = [&](CLI::App* sc) {
    sc->add_option("-i,--input", input, "input JSON document ('-' reads stdin)")
        ->required();
    sc->add_option("-o,--output", output, "report destination (default: stdout)");
    sc->add_option("--output-format", outputFormat, "report format")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();
    sc->add_option("--truncation", truncation,
                   "working series precision override (0 = as configured)")
        ->check(CLI::NonNegativeNumber);
    sc->add_option("--verify", verify, "verification level")
        ->check(CLI::IsMember({"none", "cross-check", "full"}))
        ->capture_default_str();
    sc->add_option("--seed", seed,
                   "seed for randomized cross-checks (reserved; the commands "
                   "here are deterministic)");
    sc->add_option("--dmax", dmax, "degree cap for the direct Tjurina/Milnor quotients")
        ->check(CLI::PositiveNumber);
    sc->add_option("--threads", threads, "parallel samples in strata scans")
        ->check(CLI::PositiveNumber);
  };
  CLI::App* cmdAnalyze =
      app.add_subcommand("analyze", "invariants and value sets of a curve germ");
  CLI::App* cmdDual = app.add_subcommand(
      "dual", "value set of a fractional ideal and of its dual");
  CLI::App* cmdPoincare = app.add_subcommand(
      "poincare", "Poincare polynomial of a fractional ideal and of its dual");
  CLI::App* cmdStrata =
      app.add_subcommand("strata", "scan an equisingular deformation plan");
  for (CLI::App* sc : {cmdAnalyze, cmdDual, cmdPoincare, cmdStrata}) addCommon(sc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Json doc = loadInput(input);
    const VerifyLevel lvl = parseVerifyLevel(verify);
    Json report;
    if (*cmdAnalyze) {
      Curve C = parseCurve(doc, truncation);
      report = analyzeReport(C, lvl, dmax);
    } else if (*cmdDual || *cmdPoincare) {
      Curve C = parseCurve(doc, truncation);
      const Json spec = doc.is_object() && doc.contains("ideal") ? doc["ideal"]
                                                                 : Json("O_D");
      report = *cmdDual ? dualReport(C, spec, lvl) : poincareReport(C, spec);
    } else {
      StrataPlan plan = parsePlan(doc, truncation);
      StrataReport scan = scanStrata(plan.family, plan.points, plan.truncation, threads,
                                     plan.seeds.empty() ? nullptr : &plan.seeds);
      report = strataReport(plan, scan);
    }
    writeOutput(output,
                outputFormat == "markdown" ? renderMarkdown(report) : report.dump(2) + "\n");
    return 0;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
