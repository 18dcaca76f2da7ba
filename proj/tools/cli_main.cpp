#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tatekit/serialize.hpp"
#include "tatekit/verify.hpp"

namespace {

using tatekit::Json;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tatekit::ParseError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw tatekit::ParseError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << std::endl;
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << std::endl;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group cohomology toolkit: Tate cohomology, cocycle calculus, "
               "Tate-Nakayama triples and place-module models"};
  app.require_subcommand(1);

  std::string scenario_path, out_path;
  auto* run = app.add_subcommand("run", "evaluate the tasks of a scenario file");
  run->add_option("file", scenario_path, "scenario JSON file")->required();
  run->add_option("--out", out_path, "write the report here instead of stdout");

  std::string suite = "all";
  std::uint64_t seed = 0;
  int cases = 100;
  auto* verify = app.add_subcommand("verify", "run a randomized property suite");
  verify->add_option("--suite", suite, "one of intlat, gmod, cochains, h1y, tn, global, bft, all");
  verify->add_option("--seed", seed, "RNG seed")->required();
  verify->add_option("--cases", cases, "number of cases");
  std::string verify_out;
  verify->add_option("--out", verify_out, "write the report here instead of stdout");

  std::string matrix_path;
  auto* snf = app.add_subcommand("snf", "Smith normal form of a JSON matrix");
  snf->add_option("--matrix", matrix_path, "file holding arrays of arrays of integers")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      tatekit::Scenario sc;
      try {
        sc = tatekit::parse_scenario(read_json_file(scenario_path));
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
      }
      tatekit::RunReport report = tatekit::run_scenario(sc);
      emit(report.to_json(), out_path);
      return report.any_error ? 1 : 0;
    }
    if (verify->parsed()) {
      tatekit::SuiteReport report;
      try {
        report = tatekit::run_verify_suite(suite, seed, cases);
      } catch (const tatekit::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
      }
      emit(report.to_json(), verify_out);
      return report.ok() ? 0 : 1;
    }
    if (snf->parsed()) {
      tatekit::IntMatrix a;
      try {
        a = tatekit::matrix_from_json(read_json_file(matrix_path));
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
      }
      tatekit::SmithDecomposition s = tatekit::smith_normal_form(a);
      emit(Json{{"U", tatekit::to_json(s.U)},
                {"D", tatekit::to_json(s.D)},
                {"V", tatekit::to_json(s.V)},
                {"rank", s.rank},
                {"group", tatekit::to_json(tatekit::cokernel_presentation(a))}},
           "");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 0;
}
