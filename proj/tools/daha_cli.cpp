#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "daha/cli.hpp"

int main(int argc, char** argv) {
  using namespace daha::cli;
  CLI::App app{"Double affine Hecke algebra toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string window = "4/3", mode = "exact", json_path;
  std::string cartan, character, lhs, rhs;

  auto common = [&](CLI::App* c) {
    c->add_option("--type", cfg.type, "Preset root type (A1, A2, A3, B2, C2, G2)");
    c->add_option("--cartan", cartan, "Cartan matrix as JSON, overrides --type");
    c->add_option("--window", window, "Window L0/margin");
    c->add_option("--mode", mode, "exact or modp:p:k");
    c->add_option("--seed", cfg.seed, "Random seed");
    c->add_option("--json", json_path, "Write the report here instead of stdout");
    c->add_option("--maxlen", cfg.maxlen, "Length bound");
    c->add_option("--samples", cfg.samples, "Number of random pairs");
    c->add_option("--character", character, "Torus character as JSON");
    c->add_option("--tau", cfg.tau, "tau = h(delta)");
    c->add_option("--zeta", cfg.zeta, "zeta = h(c)");
    c->add_option("--bound", cfg.bound, "Regularity search bound");
    c->add_option("--lhs", lhs, "First operand (JSON)");
    c->add_option("--rhs", rhs, "Second operand (JSON)");
  };

  std::string command;
  std::map<std::string, std::vector<std::string>> groups = {
      {"roots", {}},
      {"weyl", {"ball", "len", "bruhat", "inv"}},
      {"daha", {"mul", "verify-relations", "y-check"}},
      {"fp", {"generators", "check-homomorphism", "structure-constants"}},
      {"repo", {"weights", "regular"}},
  };
  for (const auto& [name, subs] : groups) {
    CLI::App* g = app.add_subcommand(name);
    if (subs.empty()) {
      common(g);
      g->callback([&command, name = name] { command = name; });
      continue;
    }
    g->require_subcommand(1);
    for (const auto& s : subs) {
      CLI::App* c = g->add_subcommand(s);
      common(c);
      c->callback([&command, full = name + " " + s] { command = full; });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInvalidConfig;
  }

  Outcome out;
  try {
    if (!cartan.empty()) cfg.cartan = cartan;
    if (!character.empty()) cfg.character = character;
    if (!lhs.empty()) cfg.lhs = lhs;
    if (!rhs.empty()) cfg.rhs = rhs;
    std::tie(cfg.window_L0, cfg.window_margin) = parse_window(window);
    cfg.mode = parse_mode(mode);
    out = run(command, cfg);
  } catch (const std::exception& e) {
    out = invalid_config(command, cfg, e.what());
  }

  const std::string text = out.report.dump(2) + "\n";
  if (json_path.empty() || json_path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(json_path);
    if (!f) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return kInvalidConfig;
    }
    f << text;
  }
  if (out.report.contains("error")) std::cerr << "error: " << out.report["error"]["message"].get<std::string>() << "\n";
  return out.exit_code;
}
