// Command line front end. Everything goes through the C API in mcg/mcg.h;
// this file never touches the library internals.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mcg/mcg.h"

namespace {

struct Options {
  std::string input;
  std::string which;  // oracle selector
  std::string name;   // construct selector
  int ell = 1;
  std::string format = "json";
  int budget_nodes = 0;
  unsigned long long seed = 0;
  int walk_count = 16;
  int walk_max_len = 10;
};

// "-" means standard input.
bool read_input(const std::string& path, std::string& out, std::string& error) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    error = "cannot open " + path;
    return false;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  out = buffer.str();
  return true;
}

int report_failure(mcg_status status, char* error) {
  std::cerr << "error (" << mcg_status_name(status) << "): "
            << (error ? error : "unspecified") << "\n";
  mcg_string_free(error);
  return static_cast<int>(status);
}

int run_construct(const Options& opt) {
  mcg_instance* instance = nullptr;
  char* error = nullptr;
  mcg_status status = mcg_instance_construct(opt.name.c_str(), &instance, &error);
  if (status != MCG_OK) return report_failure(status, error);
  char* text = nullptr;
  status = mcg_instance_to_json(instance, &text, &error);
  mcg_instance_free(instance);
  if (status != MCG_OK) return report_failure(status, error);
  std::cout << text;
  mcg_string_free(text);
  return 0;
}

int run_command(const std::string& command, const Options& opt) {
  std::string document, io_error;
  if (!read_input(opt.input, document, io_error)) {
    std::cerr << "error (input_error): " << io_error << "\n";
    return static_cast<int>(MCG_INPUT_ERROR);
  }

  mcg_instance* instance = nullptr;
  char* error = nullptr;
  mcg_status status = mcg_instance_parse(document.c_str(), &instance, &error);
  if (status != MCG_OK) return report_failure(status, error);

  mcg_params params;
  mcg_params_init(&params);
  params.ell = opt.ell;
  params.budget_nodes = opt.budget_nodes;
  params.seed = opt.seed;
  params.walk_count = opt.walk_count;
  params.walk_max_len = opt.walk_max_len;
  if (!opt.which.empty()) params.oracle_which = opt.which.c_str();

  char* report = nullptr;
  status = mcg_analyze(instance, command.c_str(), &params, &report, &error);
  mcg_instance_free(instance);
  if (status != MCG_OK) return report_failure(status, error);

  if (opt.format == "text") {
    char* text = nullptr;
    status = mcg_render_text(report, &text, &error);
    mcg_string_free(report);
    if (status != MCG_OK) return report_failure(status, error);
    std::cout << text;
    mcg_string_free(text);
  } else {
    std::cout << report;
    mcg_string_free(report);
  }
  return 0;
}

void add_common_flags(CLI::App* sub, Options& opt) {
  sub->add_option("input", opt.input, "instance document path, or - for stdin")->required();
  sub->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  sub->add_option("--budget-nodes", opt.budget_nodes, "override the node budget");
  sub->add_option("--seed", opt.seed, "seed for sampled walks");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of weighted matching-covered graphs and rooted digraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(mcg_version()); });

  Options opt;
  std::vector<std::pair<std::string, CLI::App*>> simple;

  for (const char* name : {"check", "potential", "spaces", "blocks", "decompose", "arb-dual"}) {
    CLI::App* sub = app.add_subcommand(name, "");
    add_common_flags(sub, opt);
    simple.emplace_back(name, sub);
  }
  for (const char* name : {"kbest-pm", "kbest-bfactor", "kbest-arb"}) {
    CLI::App* sub = app.add_subcommand(name, "");
    add_common_flags(sub, opt);
    sub->add_option("--ell", opt.ell, "which level of the spectrum to pin")
        ->capture_default_str();
    simple.emplace_back(name, sub);
  }
  {
    CLI::App* sub = app.add_subcommand("oracle", "raw enumerations with validation");
    sub->add_option("which", opt.which, "pm | cycles | bfactors | arborescences | tightcuts | walks")
        ->required();
    add_common_flags(sub, opt);
    sub->add_option("--walk-count", opt.walk_count, "walks: sample size")->capture_default_str();
    sub->add_option("--walk-max-len", opt.walk_max_len, "walks: length cap")
        ->capture_default_str();
    simple.emplace_back("oracle", sub);
  }
  CLI::App* construct = app.add_subcommand("construct", "emit a catalog instance document");
  construct->add_option("name", opt.name, "catalog entry name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(MCG_INPUT_ERROR);
  }

  if (construct->parsed()) return run_construct(opt);
  for (const auto& [name, sub] : simple)
    if (sub->parsed()) return run_command(name, opt);
  std::cerr << "error (input_error): no subcommand\n";
  return static_cast<int>(MCG_INPUT_ERROR);
}
