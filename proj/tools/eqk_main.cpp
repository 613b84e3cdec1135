#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "eqk/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Equivariant K-theory of complete symmetric varieties of minimal rank"};
  std::string spec_path, verb, out_path;
  eqk::Int box = 2;
  app.add_option("--spec", spec_path, "job file (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("--verb", verb, "operation to run")->required()->check(CLI::IsMember(eqk::verbs()));
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--box", box, "exponent bound for localization -> Stanley-Reisner preimages")->check(CLI::NonNegativeNumber);
  CLI11_PARSE(app, argc, argv);

  eqk::JobSpec job;
  job.verb = verb;
  job.box = box;
  if (!out_path.empty()) job.out = out_path;
  eqk::RunResult result;
  try {
    std::ifstream in(spec_path);
    job.spec = eqk::Json::parse(in);
    result = eqk::run(job);
  } catch (const eqk::Json::exception& e) {
    result = {2, eqk::error_json("InvalidInput", std::string("cannot parse job file: ") + e.what())};
  }

  if (verb == "verify" && result.report.contains("criteria"))
    for (const auto& c : result.report["criteria"])
      std::cerr << "criterion " << c["id"].get<int>() << " (" << c["name"].get<std::string>()
                << "): " << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "  " << c["detail"].get<std::string>()
                << "\n";

  std::string text = result.report.dump(2) + "\n";
  if (job.out) {
    std::ofstream out(*job.out);
    if (!out) {
      std::cerr << "cannot write " << *job.out << "\n";
      return 2;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return result.exit_code;
}
