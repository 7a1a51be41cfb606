#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "slrecon/harness.hpp"

namespace fs = std::filesystem;
using namespace slrecon;

namespace {

int run(const std::string& experiment, const std::string& config_path, const std::string& outdir) {
  RunConfig cfg = parse_config_file(config_path);
  if (!cfg.experiment.empty() && cfg.experiment != experiment)
    throw config_error("config experiment '" + cfg.experiment + "' does not match subcommand '" +
                       experiment + "'");
  cfg.experiment = experiment;
  fs::create_directories(outdir);

  if (experiment == "recon-sweep") {
    const auto rep = run_conservation_sweep(cfg);
    write_sweep_csv(rep, cfg.recon, outdir + "/conservation.csv");
    for (const auto& r : rep.rows)
      std::cout << r.function << " Err = " << format_g17(r.err) << "\n";
    if (rep.pfc_min_value)
      std::cout << "ubar3 min value = " << format_g17(*rep.pfc_min_value)
                << " (max " << format_g17(rep.pfc_max_value) << ")\n";
    return 0;
  }
  if (experiment == "recon-convergence") {
    const auto rep = run_convergence(cfg);
    write_convergence_csv(rep, outdir + "/convergence.csv");
    for (const auto& r : rep.rows)
      std::cout << "n=" << r.n << " error=" << format_g17(r.error)
                << (std::isnan(r.order) ? "" : " order=" + format_g17(r.order)) << "\n";
    return 0;
  }

  const bool accuracy_init = cfg.init.empty() || cfg.init == "xj-accuracy" ||
                             cfg.init == "bw-accuracy" || cfg.init == "xj2d-accuracy";
  if (accuracy_init) {
    const auto rep = run_convergence(cfg);
    write_convergence_csv(rep, outdir + "/convergence.csv");
    for (const auto& r : rep.rows)
      std::cout << "kappa=" << format_g17(r.kappa) << " n=" << r.n
                << " error=" << format_g17(r.error)
                << (std::isnan(r.order) ? "" : " order=" + format_g17(r.order)) << "\n";
    return 0;
  }

  const auto res = run_shock(cfg);
  write_solution_csv(res, outdir + "/solution.csv");
  write_series_csv(res.econ, outdir + "/econ.csv");
  std::cout << "max |E_con| = " << format_g17(res.econ.max_abs()) << "\n";
  if (res.shock_position)
    std::cout << "shock position = " << format_g17(*res.shock_position) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conservative semi-Lagrangian reconstruction experiments"};
  app.require_subcommand(1);
  std::string config_path, outdir = ".";
  for (const auto& name :
       {"recon-sweep", "recon-convergence", "xinjin1d", "xinjin2d", "broadwell"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "experiment configuration file")->required();
    sub->add_option("--out", outdir, "output directory");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run(app.get_subcommands().front()->get_name(), config_path, outdir);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
