#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "weyl/cli.hpp"

int main(int argc, char** argv) {
  using namespace weyl::cli;
  CLI::App app{"Centralizers, nilpotent filtrations and Dixmier classes in the first Weyl algebra"};
  app.require_subcommand(1, 1);

  std::string format = "text", box, suite, config;
  int k = -1, imax = -1;
  std::string element;

  for (const auto& verb : verbs()) {
    auto* sub = app.add_subcommand(verb);
    sub->add_option("element", element, "expression in X, Y, H")->required(verb != "verify");
    sub->add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--box", box, "oracle box G,D");
    sub->add_option("--k", k, "filtration level for verify")->check(CLI::NonNegativeNumber);
    sub->add_option("--imax", imax, "largest ideal index")->check(CLI::PositiveNumber);
    sub->add_option("--suite", suite, "file with one element per line");
    sub->add_option("--config", config, "key=value config file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : Exit::Syntax;
  }

  Command c;
  c.verb = app.get_subcommands().front()->get_name();
  if (!element.empty()) c.element = element;
  try {
    c.format = parse_format(format);
    if (!box.empty()) c.box = parse_box(box);
  } catch (const weyl::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return Exit::Syntax;
  }
  if (k >= 0) c.k = k;
  if (imax >= 0) c.imax = imax;
  if (!suite.empty()) c.suite_file = suite;
  if (!config.empty())
    c.config_file = config;
  else if (const char* env = std::getenv("WEYL_DIXMIER_CONFIG"); env && *env)
    c.config_file = env;
  return run(c, std::cout, std::cerr);
}
