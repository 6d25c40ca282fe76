// Command-line harness: runs the experiment sweeps and the acceptance
// checks, emitting CSV/JSON reports.
//
// Exit codes: 0 all checks in the report passed, 1 at least one check
// failed, 2 usage or configuration error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "perispline/acceptance.hpp"
#include "perispline/harness.hpp"

namespace {

struct CliOptions {
  perispline::SweepConfig sweep;
  std::string format = "csv";
  std::string out;
};

void add_common_options(CLI::App* sub, CliOptions& opt, bool with_l) {
  sub->add_option("--r", opt.sweep.r_list, "Spline orders (default: experiment-specific sweep)")
      ->delimiter(',');
  sub->add_option("--N", opt.sweep.N_list, "Mesh sizes (default: experiment-specific sweep)")
      ->delimiter(',');
  if (with_l)
    sub->add_option("--l", opt.sweep.l_list, "Derivative levels (default: 0 1)")->delimiter(',');
  sub->add_option("--corpus", opt.sweep.corpus,
                  "Test function labels (sin1 cos1 sin2 cos2 sin5 cos5 expsin randtrig)")
      ->delimiter(',');
  sub->add_option("--seed", opt.sweep.seed, "Seed for the randtrig corpus entry");
  sub->add_option("--nodes-per-cell", opt.sweep.nodes_per_cell,
                  "Gauss nodes per mesh cell (0 = automatic)");
  sub->add_option("--samples-per-cell", opt.sweep.samples_per_cell,
                  "Sup-norm sampling density per cell");
  sub->add_option("--format", opt.format, "Report format: csv, json, or both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  sub->add_option("--out", opt.out,
                  "Output path (with --format both, .csv/.json are appended); "
                  "when absent, $PERISPLINE_OUT names an output directory, "
                  "otherwise the report goes to stdout");
}

bool write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << content;
  f.flush();
  return f.good();
}

// Returns 0 on success, 2 on I/O trouble.
int emit_report(const std::string& experiment, const std::vector<perispline::ReportRow>& rows,
                const CliOptions& opt) {
  namespace fs = std::filesystem;
  const bool want_csv = opt.format == "csv" || opt.format == "both";
  const bool want_json = opt.format == "json" || opt.format == "both";

  std::string base = opt.out;
  bool force_extension = opt.format == "both";
  if (base.empty()) {
    if (const char* env = std::getenv("PERISPLINE_OUT"); env != nullptr && *env != '\0') {
      std::error_code ec;
      fs::create_directories(fs::path(env), ec);
      if (ec) {
        std::cerr << "error: cannot create output directory " << env << ": " << ec.message()
                  << '\n';
        return 2;
      }
      base = (fs::path(env) / experiment).string();
      force_extension = true;
    } else {
      if (want_csv) std::cout << perispline::render_csv(rows);
      if (want_json) std::cout << perispline::render_json(rows);
      return 0;
    }
  }

  const auto target = [&](const char* ext, bool lone) {
    return (!force_extension && lone) ? fs::path(base) : fs::path(base + ext);
  };
  if (want_csv) {
    const fs::path p = target(".csv", !want_json);
    if (!write_file(p, perispline::render_csv(rows))) {
      std::cerr << "error: cannot write " << p << '\n';
      return 2;
    }
    std::cerr << "wrote " << p.string() << '\n';
  }
  if (want_json) {
    const fs::path p = target(".json", !want_csv);
    if (!write_file(p, perispline::render_json(rows))) {
      std::cerr << "error: cannot write " << p << '\n';
      return 2;
    }
    std::cerr << "wrote " << p.string() << '\n';
  }
  return 0;
}

int run_experiment(const std::string& experiment, const CliOptions& opt) {
  std::vector<perispline::ReportRow> rows;
  if (experiment == "gram")
    rows = perispline::run_gram(opt.sweep);
  else if (experiment == "decay")
    rows = perispline::run_decay(opt.sweep);
  else if (experiment == "project")
    rows = perispline::run_project(opt.sweep);
  else
    rows = perispline::run_quasi(opt.sweep);

  const int io = emit_report(experiment, rows, opt);
  if (io != 0) return io;
  for (const perispline::ReportRow& row : rows)
    if (!row.pass) {
      std::cerr << experiment << ": " << rows.size() << " rows, at least one check failed ("
                << row.metric << ")\n";
      return 1;
    }
  std::cerr << experiment << ": " << rows.size() << " rows, all checks passed\n";
  return 0;
}

int run_verify_all() {
  const auto results = perispline::run_acceptance(&std::cout);
  int passed = 0;
  for (const auto& res : results) passed += res.pass ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perispline: periodic spline projection and quasi-interpolation experiments"};
  app.set_version_flag("--version", "perispline 0.1.0");
  app.set_config("--config", "", "Read options from an INI file");
  app.require_subcommand(1);

  CliOptions opt;
  CLI::App* gram =
      app.add_subcommand("gram", "Gram stencils, symbol checks, and spectral bounds");
  add_common_options(gram, opt, false);
  CLI::App* decay =
      app.add_subcommand("decay", "Inverse-row decay certificates and fitted constants");
  add_common_options(decay, opt, false);
  CLI::App* project =
      app.add_subcommand("project", "L2 projection errors, stability, convergence orders");
  add_common_options(project, opt, true);
  CLI::App* quasi =
      app.add_subcommand("quasi", "Quasi-interpolant stencils, errors, and comparisons");
  add_common_options(quasi, opt, true);
  CLI::App* verify =
      app.add_subcommand("verify-all", "Run every acceptance criterion and print a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify_all();
    for (const CLI::App* sub : {gram, decay, project, quasi})
      if (sub->parsed()) return run_experiment(sub->get_name(), opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
