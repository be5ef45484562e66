// zdlab: command-line front end for the zero-density toolkit.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>

#include "commands.hpp"
#include "zdl/report.hpp"

namespace {

void print_error(std::string_view kind, const std::string& message) {
  std::cout << zdl::Json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
}

std::string flag_name(std::string key) {
  for (char& c : key)
    if (c == '_') c = '-';
  return "--" + key;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zdlab: zeta sums, zeros and zero-density experiments"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags override it)");

  std::map<std::string, std::map<std::string, std::string>> raw;
  std::map<std::string, CLI::App*> subs;
  for (const auto& cmd : zdlab::commands()) {
    CLI::App* sub = app.add_subcommand(cmd);
    subs[cmd] = sub;
    const zdl::Json defs = zdlab::defaults(cmd);
    for (const auto& [key, value] : defs.items()) {
      auto* opt = sub->add_option(flag_name(key), raw[cmd][key], "default: " + value.dump());
      if (cmd == "verify-lemma" && key == "id") {
        // also accepted positionally: zdlab verify-lemma 4.1
        sub->add_option("suite", raw[cmd]["id#pos"], "suite id or 'all'")->excludes(opt);
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("config", e.what());
    return 2;
  }

  try {
    std::string command;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) command = name;
    zdl::Json config;
    if (!config_path.empty()) {
      zdl::require(std::filesystem::exists(config_path), zdl::ErrorKind::io,
                   "config file not found: " + config_path);
      try {
        config = zdl::Json::parse(zdl::read_file(config_path));
      } catch (const zdl::Json::exception& e) {
        zdl::fail(zdl::ErrorKind::parse, "config " + config_path + ": " + e.what());
      }
    }
    std::vector<std::pair<std::string, std::string>> flags;
    CLI::App* sub = subs.at(command);
    for (const auto& [key, value] : raw[command]) {
      if (key == "id#pos") {
        if (sub->count("suite")) flags.emplace_back("id", value);
        continue;
      }
      if (sub->count(flag_name(key))) flags.emplace_back(key, value);
    }
    const auto inv = zdlab::resolve(command, config, flags);
    return zdlab::execute(inv);
  } catch (const zdl::Error& e) {
    print_error(zdl::to_string(e.kind()), e.what());
    return zdlab::exit_code(e.kind());
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 3;
  }
}
