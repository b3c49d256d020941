#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "isogeo_app/app.hpp"

using namespace isogeo;

int main(int argc, char** argv) {
  CLI::App cli{"isogeo: numerical checks for isoparametric hypersurfaces and their Lagrangian lifts"};
  cli.require_subcommand(1);

  auto* list = cli.add_subcommand("list-models", "list registered models");

  app::RunConfig cfg;
  std::string suites;
  std::vector<std::string> tols;
  double fd_step = cfg.fd.base_step;
  auto* verify = cli.add_subcommand("verify", "run verification suites");
  verify->add_option("--model", cfg.model, "model name")->required();
  verify->add_option("--suites", suites, "comma separated subset of self,lift,invariants,weyl,codazzi-gauss,symmetry,cartan,homog6");
  verify->add_option("--points", cfg.points, "sample points")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  verify->add_option("--tol", tols, "tolerance override name=value (repeatable)");
  verify->add_option("--fd-step", fd_step, "first-derivative base step")->capture_default_str();
  verify->add_option("--out", cfg.out, "report path (.json, or .md for markdown)");

  app::ExportRequest ex;
  int point = -1;
  std::string ex_out;
  auto* exp = cli.add_subcommand("export-alpha", "dump alpha components");
  exp->add_option("--model", ex.model, "model name")->required();
  auto* point_opt = exp->add_option("--point", point, "sample point index");
  exp->add_option("--seed", ex.seed, "sampling seed")->capture_default_str();
  exp->add_option("--fd-step", fd_step, "first-derivative base step");
  exp->add_option("--out", ex_out, "output path (default stdout)");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      std::cout << app::list_models_table();
      return 0;
    }
    if (*verify) {
      if (!suites.empty()) cfg.suites = app::parse_suites(suites);
      for (const auto& t : tols) cfg.tol_overrides.insert(app::parse_tol(t));
      cfg.fd.base_step = fd_step;
      auto rep = app::run_verify(cfg);
      if (!cfg.out.empty()) app::write_report(rep, cfg.out);
      std::cout << app::summary_line(rep) << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (*exp) {
      if (point_opt->count()) ex.point = point;
      ex.fd.base_step = fd_step;
      const auto j = app::export_alpha(ex);
      if (ex_out.empty()) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::ofstream f(ex_out);
        if (!f) throw app::ConfigError("cannot write '" + ex_out + "'");
        f << j.dump(2) << "\n";
      }
      return 0;
    }
  } catch (const app::ConfigError& e) {
    std::cerr << "isogeo: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "isogeo: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "isogeo: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
