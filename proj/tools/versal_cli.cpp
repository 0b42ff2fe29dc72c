// Command-line front end. Talks to the library only through the C API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "versal/versal.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::optional<std::vector<int>> parseDegree(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) return std::nullopt;
      out.push_back(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (out.empty()) return std::nullopt;
  return out;
}

int defaultMaxOrder() {
  const char* env = std::getenv("VERSAL_MAX_ORDER");
  if (!env || !*env) return 20;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    return -1;
  }
}

void printLog(const char* line, void*) { std::cerr << line << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangent spaces, obstruction spaces and versal deformations of polynomial ideals"};
  app.name("versal");
  std::string command, file, degreeText, outputPath;
  int maxOrder = defaultMaxOrder();
  int verbosity = 0;
  int upto = 10;
  bool asJson = false, smartLift = false;

  app.add_option("command", command, "t1, t2, normal, deform, gb or hilbert")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "normal", "deform", "gb", "hilbert"}));
  app.add_option("file", file, "input file")->required();
  app.add_option("--degree", degreeText, "multidegree, e.g. 0,0,0");
  app.add_option("--max-order", maxOrder, "highest t-order to lift to (default 20 or $VERSAL_MAX_ORDER)");
  app.add_option("--verbose", verbosity, "0 silent, 1 status line, 2 per-order log");
  app.add_option("--upto", upto, "last degree printed by hilbert");
  app.add_option("--output", outputPath, "write the result here instead of stdout");
  app.add_flag("--json", asJson, "structured output");
  app.add_flag("--smart-lift", smartLift, "not supported");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (smartLift) {
    std::cerr << "error: --smart-lift is not supported; no algorithm for minimizing higher "
                 "order terms is implemented\n";
    return kExitUsage;
  }
  if (maxOrder < 1) {
    std::cerr << "error: the maximal order must be a positive integer\n";
    return kExitUsage;
  }
  std::vector<int> degree;
  if (!degreeText.empty()) {
    auto parsed = parseDegree(degreeText);
    if (!parsed) {
      std::cerr << "error: --degree expects comma-separated integers, got '" << degreeText << "'\n";
      return kExitUsage;
    }
    degree = *parsed;
  }

  vd_system* system = nullptr;
  if (vd_system_load_file(file.c_str(), &system) != VD_OK) {
    std::cerr << "error: " << vd_last_error() << '\n';
    return kExitFailure;
  }

  vd_run_options options;
  vd_run_options_init(&options);
  options.command = command.c_str();
  options.degree = degree.empty() ? nullptr : degree.data();
  options.degree_len = degree.size();
  options.max_order = maxOrder;
  options.verbosity = verbosity;
  options.hilbert_upto = upto;
  options.log = printLog;

  vd_result* result = nullptr;
  vd_status status = vd_run(system, &options, &result);
  vd_system_free(system);
  if (status != VD_OK) {
    std::cerr << "error: " << vd_last_error() << '\n';
    return status == VD_ERR_USAGE ? kExitUsage : kExitFailure;
  }

  std::string body = asJson ? vd_result_json(result) : vd_result_text(result);
  vd_result_free(result);
  if (outputPath.empty()) {
    std::cout << body;
    return kExitOk;
  }
  std::ofstream out(outputPath, std::ios::binary);
  out << body;
  if (!out) {
    std::cerr << "error: cannot write '" << outputPath << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}
