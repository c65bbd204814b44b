#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pyracat/algmod/json_io.hpp"
#include "pyracat/cli/suites.hpp"
#include "pyracat/util/rng.hpp"

namespace {

using nlohmann::json;
using pyracat::SuiteResult;

std::optional<json> read_json(const std::string& path, std::string& error) {
  std::ifstream in(path);
  if (!in) {
    error = "cannot open " + path;
    return std::nullopt;
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    error = path + ": " + e.what();
    return std::nullopt;
  }
}

SuiteResult input_error(const std::string& command, const std::string& what) {
  return {{{"schema", 1}, {"command", command}, {"error", what}}, pyracat::kInputError};
}

SuiteResult with_algebra(const std::string& command, const std::string& path,
                         const std::function<SuiteResult(const pyracat::Algebra&)>& run) {
  std::string error;
  const auto j = read_json(path, error);
  if (!j) return input_error(command, error);
  try {
    return run(pyracat::algebra_from_json(*j));
  } catch (const std::invalid_argument& e) {
    return input_error(command, e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pyramids over additive categories and the cell calculus of bimodule 2-categories"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the JSON report here instead of stdout");

  auto* check = app.add_subcommand("check", "Check the pyramid axioms of a MatCat pyramid file");
  std::string pyramid_path;
  check->add_option("file", pyramid_path, "Pyramid JSON file")->required();

  auto* monoidal = app.add_subcommand("monoidal", "Randomized strict monoidal trials over MatCat");
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool inject_fault = false;
  monoidal->add_option("--trials", trials, "Number of trials");
  auto* seed_opt = monoidal->add_option("--seed", seed, "64-bit seed (default: PYRACAT_SEED or 1)");
  monoidal->add_flag("--inject-fault", inject_fault, "Use a deliberately broken tensor");

  auto* algebra = app.add_subcommand("algebra", "Composition tables, cells and multiplicity identities");
  std::string algebra_path;
  std::string flavor = "DA";
  algebra->add_option("--algebra", algebra_path, "Algebra JSON file")->required();
  algebra->add_option("--flavor", flavor, "CA or DA")->check(CLI::IsMember({"CA", "DA"}));

  auto* da = app.add_subcommand("da-verify", "Homotopy verification of the D_A table inside pyramids");
  std::string da_path;
  std::size_t length = 1;
  da->add_option("--algebra", da_path, "Algebra JSON file")->required();
  da->add_option("--length", length, "Resolution length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pyracat::kInputError;
  }

  SuiteResult result;
  if (check->parsed()) {
    std::string error;
    const auto j = read_json(pyramid_path, error);
    result = j ? pyracat::check_pyramid_file(*j) : input_error("check", error);
  } else if (monoidal->parsed()) {
    if (seed_opt->count() == 0) seed = pyracat::seed_from_env(1);
    result = pyracat::monoidal_suite(trials, seed, inject_fault);
  } else if (algebra->parsed()) {
    const auto f = flavor == "CA" ? pyracat::Flavor::CA : pyracat::Flavor::DA;
    result = with_algebra("algebra", algebra_path, [&](const auto& a) { return pyracat::algebra_suite(a, f); });
  } else {
    result = with_algebra("da-verify", da_path, [&](const auto& a) { return pyracat::da_verify_suite(a, length); });
  }

  const std::string text = result.report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream(output) << text;
  }
  if (result.report.contains("warning")) std::cerr << "warning: " << result.report["warning"].get<std::string>() << "\n";
  if (result.report.contains("error")) std::cerr << "error: " << result.report["error"].get<std::string>() << "\n";
  return result.exit_code;
}
