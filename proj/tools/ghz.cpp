#include <CLI11.hpp>
#include <iostream>

#include "ghz/cli/run.hpp"

int main(int argc, char** argv) {
  using namespace ghz::cli;
  CLI::App app{"Horizontal G_a-actions on complexity-one T-varieties"};
  Request q;
  std::string name_or_file;
  app.add_option("command", q.command, "command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("name", name_or_file, "builtin example name (for 'example')");
  app.add_option("--scenario", q.scenario_file, "scenario JSON file");
  app.add_option("--example", q.example, "builtin scenario name");
  app.add_option("-m,--m", q.options.m, "weight, e.g. \"1,0\"");
  app.add_option("--order", q.options.order, "highest derivation order");
  app.add_flag("--json", q.options.json, "print the report as JSON");
  app.add_flag("--trust-irreducible", q.options.trust, "accept support points without an irreducibility proof");
  app.add_option("--field", q.field, "rebuild the scenario over Q, F<p> or F<p>(l)");
  app.add_option("--run", q.run, "command to run on the example");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  if (!name_or_file.empty()) {
    if (q.command != "example") {
      std::cerr << "error: unexpected argument '" << name_or_file << "'\n";
      return kUsage;
    }
    q.example = name_or_file;
  }
  Report r = execute(q);
  if (q.options.json)
    std::cout << r.to_json().dump(2) << "\n";
  else
    (r.exit_code == kUsage ? std::cerr : std::cout) << r.text();
  return r.exit_code;
}
