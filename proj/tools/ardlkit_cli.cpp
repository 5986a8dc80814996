// Command-line driver: one subcommand per analysis stage plus `run` for the
// whole pipeline and `mc` for the simulation experiments.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ardlkit/experiments.hpp"
#include "ardlkit/pipeline.hpp"
#include "ardlkit/report.hpp"
#include "ardlkit/svg.hpp"

using namespace ardlkit;

namespace {

constexpr const char* kDefaultOut = "ardlkit-out";

struct Flags {
  std::string config;
  std::string data;
  std::string dependent;
  std::vector<std::string> regressors;
  std::vector<std::string> log_vars;
  std::optional<int> max_p, max_q;
  std::string lags;
  std::string criterion;
  std::string bounds;
  std::optional<double> significance;
  std::string out;
  std::optional<std::uint64_t> seed;
  bool force = false;
  bool json = false;
};

PipelineConfig resolve_config(const Flags& f) {
  PipelineConfig c = f.config.empty() ? PipelineConfig{} : PipelineConfig::from_file(f.config);
  if (!f.data.empty()) c.data_path = f.data;
  if (!f.dependent.empty()) c.dependent = f.dependent;
  if (!f.regressors.empty()) c.regressors = f.regressors;
  if (!f.log_vars.empty()) c.log_vars = f.log_vars;
  if (f.max_p) c.max_p = *f.max_p;
  if (f.max_q) c.max_q = *f.max_q;
  if (!f.lags.empty()) {
    if (f.lags == "auto") {
      c.granger_lags.reset();
    } else {
      try {
        c.granger_lags = std::stoi(f.lags);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidInput, "--lags expects auto or an integer, got '" + f.lags + "'");
      }
    }
  }
  if (!f.criterion.empty()) {
    const auto crit = parse_criterion(f.criterion);
    if (!crit) throw Error(ErrorKind::InvalidInput, "--criterion expects aic, bic or hq");
    c.criterion = *crit;
  }
  if (!f.bounds.empty()) {
    const auto t = parse_bounds_table(f.bounds);
    if (!t) throw Error(ErrorKind::InvalidInput, "--bounds expects paper-table4 or general");
    c.bounds_table = *t;
  }
  if (f.significance) c.significance = *f.significance;
  if (f.seed) c.seed = *f.seed;
  if (f.force) c.force = true;
  if (!f.out.empty()) {
    c.output_dir = f.out;
  } else if (c.output_dir.empty()) {
    const char* env = std::getenv("ARDLKIT_OUT");
    c.output_dir = env && *env ? env : kDefaultOut;
  }
  c.validate();
  return c;
}

void emit(const Flags& f, const std::string& markdown, const report::Json& json) {
  if (f.json)
    std::cout << json.dump(2) << '\n';
  else
    std::cout << markdown;
}

int run_stage(const std::string& name, const Flags& f) {
  const PipelineConfig config = resolve_config(f);
  const PreparedData prepared = prepare_data(config);
  const Dataset& data = prepared.data;

  if (name == "validate") {
    std::cout << "ok: " << data.width() << " variables, " << data.start_year() << "-" << data.end_year() << " ("
              << data.length() << " observations)\n";
    return 0;
  }
  if (name == "summary") {
    const auto stats = summary_stats(data);
    emit(f, report::summary_table(stats), report::to_json(stats));
    return 0;
  }
  if (name == "unitroot") {
    const auto classes = classify_integration(data, default_unit_root_tests());
    emit(f, report::unit_root_table(classes), report::to_json(classes));
    return 0;
  }
  if (name == "granger") {
    const auto results = granger_matrix(data, prepared.spec.dependent, config.granger_lags);
    emit(f, report::granger_table(results), report::to_json(results));
    return 0;
  }
  if (name == "robustness") {
    std::vector<report::RobustnessColumn> cols;
    report::Json json = report::Json::array();
    for (auto m : {CointMethod::Fmols, CointMethod::Dols, CointMethod::Ccr}) {
      const auto fit = coint_fit(data, prepared.spec, m, config.coint);
      const std::string label = m == CointMethod::Fmols ? "FMOLS" : (m == CointMethod::Dols ? "DOLS" : "CCR");
      cols.push_back({label, report::rows_of(fit)});
      json.push_back(report::to_json(fit));
    }
    emit(f, report::robustness_table(cols), json);
    return 0;
  }

  const auto est = estimate_model(prepared, config);
  if (name == "bounds") {
    emit(f, report::bounds_table(est.bounds), report::to_json(est.bounds));
    return 0;
  }
  if (!est.ecm) {
    std::cerr << "error: no cointegration at " << report::fixed(config.significance * 100, 1)
              << "% (F = " << report::statistic_text(est.bounds.f_statistic)
              << "); rerun with --force to estimate the error-correction model anyway\n";
    return 1;
  }
  const EcmFit& ecm = *est.ecm;
  if (name == "estimate") {
    emit(f,
         "ARDL" + est.order.label() + "\n\n" +
             report::ardl_table(report::rows_of(ecm.long_run), report::rows_of(ecm.short_run)),
         report::to_json(ecm));
    return 0;
  }
  if (name == "diagnose") {
    const auto d = run_diagnostics(ecm.short_run, ecm.design, config.lm_order);
    emit(f, report::diagnostics_table(d), report::to_json(d));
    return 0;
  }
  if (name == "stability") {
    const auto stab = stability_of(ecm);
    SvgOptions svg;
    svg.x_label = "Year";
    svg.x_origin = stab.first_year - 1;
    std::filesystem::create_directories(config.output_dir);
    const auto dir = std::filesystem::path(config.output_dir);
    write_text_file((dir / "cusum.svg").string(), render_stability_svg(stab.cusum, svg));
    write_text_file((dir / "cusumsq.svg").string(), render_stability_svg(stab.cusumsq, svg));
    std::cout << "CUSUM: " << (stab.cusum.stable ? "stable" : "unstable")
              << "\nCUSUM of squares: " << (stab.cusumsq.stable ? "stable" : "unstable") << "\nwrote "
              << (dir / "cusum.svg").string() << " and " << (dir / "cusumsq.svg").string() << '\n';
    return 0;
  }
  throw Error(ErrorKind::InvalidInput, "unknown subcommand " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ARDL bounds-testing toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--config", f.config, "JSON configuration file")->check(CLI::ExistingFile);
  app.add_option("--data", f.data, "CSV input (overrides the config)");
  app.add_option("--dependent", f.dependent, "dependent variable");
  app.add_option("--regressors", f.regressors, "regressors")->delimiter(',');
  app.add_option("--log", f.log_vars, "variables to log-transform (stored as L<name>)")->delimiter(',');
  app.add_option("--max-p", f.max_p, "largest dependent-variable lag in the ARDL search");
  app.add_option("--max-q", f.max_q, "largest regressor lag in the ARDL search");
  app.add_option("--lags", f.lags, "Granger lags: auto or N");
  app.add_option("--criterion", f.criterion, "aic, bic or hq");
  app.add_option("--bounds", f.bounds, "bounds critical values: general or paper-table4");
  app.add_option("--significance", f.significance, "significance level for the bounds decision");
  app.add_option("--out", f.out, "output directory (default: $ARDLKIT_OUT, else ./ardlkit-out)");
  app.add_option("--seed", f.seed, "seed recorded in reports and used by simulations");
  app.add_flag("--force", f.force, "estimate the error-correction model without a cointegration verdict");
  app.add_flag("--json", f.json, "print JSON instead of markdown");

  const std::vector<std::pair<std::string, std::string>> stages{
      {"validate", "check the configuration and load the data"},
      {"summary", "descriptive statistics"},
      {"unitroot", "ADF, PP and DF-GLS at levels and first differences"},
      {"bounds", "ARDL order selection and bounds F test"},
      {"estimate", "long-run coefficients and error-correction model"},
      {"robustness", "FMOLS, DOLS and CCR"},
      {"granger", "pairwise Granger causality"},
      {"diagnose", "normality, serial correlation and heteroscedasticity tests"},
      {"stability", "CUSUM and CUSUM of squares figures"},
  };
  std::string chosen;
  for (const auto& [name, help] : stages) app.add_subcommand(name, help)->callback([&chosen, n = name] { chosen = n; });

  auto* run = app.add_subcommand("run", "full pipeline into a run directory");
  run->callback([&chosen] { chosen = "run"; });

  auto* mc = app.add_subcommand("mc", "run a named Monte Carlo experiment");
  std::string experiment;
  std::optional<std::size_t> reps;
  bool list = false, serial = false;
  mc->add_option("experiment", experiment, "experiment name (see --list)");
  mc->add_option("--reps", reps, "replications (default: the experiment's own)");
  mc->add_flag("--list", list, "list experiments");
  mc->add_flag("--serial", serial, "run replications on one thread");
  mc->callback([&chosen] { chosen = "mc"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (chosen == "mc") {
      if (list || experiment.empty()) {
        for (const auto& e : experiments())
          std::cout << e.name << "  (" << e.default_reps << " reps)  " << e.description << '\n';
        return 0;
      }
      const auto r = run_experiment(experiment, reps, f.seed.value_or(0),
                                    serial ? Execution::Serial : Execution::Parallel);
      std::cout << report::summary_line(r) << '\n' << report::to_json(r).dump(2) << '\n';
      return 0;
    }
    if (chosen == "run") {
      const auto bundle = run_pipeline(resolve_config(f));
      for (const auto& w : bundle.warnings) std::cerr << "warning: " << w << '\n';
      std::cout << bundle.file("summary.md") << "\nwrote " << bundle.files.size() << " files to "
                << resolve_config(f).output_dir << '\n';
      return 0;
    }
    return run_stage(chosen, f);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
