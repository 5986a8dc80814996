#include "ardlkit/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ardlkit/report.hpp"
#include "ardlkit/svg.hpp"

namespace ardlkit {

namespace fs = std::filesystem;
using report::Json;

StageError::StageError(std::string stage, const Error& cause, const std::string& hint)
    : Error(cause.kind(), stage + ": " + cause.what() + (hint.empty() ? "" : " (" + hint + ")")),
      stage_(std::move(stage)) {}

namespace {

void invalid(const std::string& message) { throw Error(ErrorKind::InvalidInput, message); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

GrangerLags parse_granger_lags(const Json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "auto") return std::nullopt;
    invalid("granger lags must be \"auto\" or a positive integer");
  }
  if (!v.is_number_integer()) invalid("granger lags must be \"auto\" or a positive integer");
  return v.get<int>();
}

// Runs `fn`, tagging any library error with the stage name and a remediation hint.
template <class Fn>
auto stage(const std::string& name, const std::string& hint, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e, hint);
  }
}

std::string document(const std::string& heading, const std::string& body) { return "# " + heading + "\n\n" + body; }

}  // namespace

PipelineConfig PipelineConfig::from_json(const std::string& json_text, const std::string& base_dir) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) invalid("config must be a JSON object");
  static const std::set<std::string> known{"data",         "columns",      "log",    "dependent", "regressors",
                                           "max_lags",     "criterion",    "bounds_table", "significance",
                                           "output_dir",   "seed",         "force",  "lm_order",  "coint"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) invalid("unknown config key '" + key + "'");

  PipelineConfig c;
  try {
    c.data_path = get_or<std::string>(j, "data", "");
    if (!c.data_path.empty() && !base_dir.empty() && fs::path(c.data_path).is_relative())
      c.data_path = (fs::path(base_dir) / c.data_path).lexically_normal().string();
    if (j.contains("columns")) {
      if (!j["columns"].is_object()) invalid("columns must map CSV headers to variable names");
      for (const auto& [col, var] : j["columns"].items()) c.columns.emplace_back(col, var.get<std::string>());
    }
    c.log_vars = get_or<std::vector<std::string>>(j, "log", {});
    c.dependent = get_or<std::string>(j, "dependent", "");
    c.regressors = get_or<std::vector<std::string>>(j, "regressors", {});
    if (j.contains("max_lags")) {
      const auto& m = j["max_lags"];
      c.max_p = get_or<int>(m, "ardl_p", c.max_p);
      c.max_q = get_or<int>(m, "ardl_q", c.max_q);
      if (m.contains("granger")) c.granger_lags = parse_granger_lags(m["granger"]);
    }
    if (j.contains("criterion")) {
      const auto crit = parse_criterion(j["criterion"].get<std::string>());
      if (!crit) invalid("criterion must be aic, bic or hq");
      c.criterion = *crit;
    }
    if (j.contains("bounds_table")) {
      const auto t = parse_bounds_table(j["bounds_table"].get<std::string>());
      if (!t) invalid("bounds_table must be general or paper-table4");
      c.bounds_table = *t;
    }
    c.significance = get_or<double>(j, "significance", c.significance);
    c.output_dir = get_or<std::string>(j, "output_dir", "");
    if (!c.output_dir.empty() && !base_dir.empty() && fs::path(c.output_dir).is_relative())
      c.output_dir = (fs::path(base_dir) / c.output_dir).lexically_normal().string();
    c.seed = get_or<std::uint64_t>(j, "seed", 0);
    c.force = get_or<bool>(j, "force", false);
    c.lm_order = get_or<int>(j, "lm_order", c.lm_order);
    if (j.contains("coint")) {
      const auto& k = j["coint"];
      if (k.contains("bandwidth") && !k["bandwidth"].is_null()) c.coint.bandwidth = k["bandwidth"].get<int>();
      c.coint.leads_lags = get_or<int>(k, "leads_lags", c.coint.leads_lags);
    }
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("config field has the wrong type: ") + e.what());
  }
  return c;
}

PipelineConfig PipelineConfig::from_file(const std::string& path) {
  return from_json(read_file(path), fs::path(path).parent_path().string());
}

std::string PipelineConfig::to_json() const {
  Json cols = Json::object();
  for (const auto& [col, var] : columns) cols[col] = var;
  Json j{{"data", data_path},
         {"columns", cols},
         {"log", log_vars},
         {"dependent", dependent},
         {"regressors", regressors},
         {"max_lags",
          {{"ardl_p", max_p},
           {"ardl_q", max_q},
           {"granger", granger_lags ? Json(*granger_lags) : Json("auto")}}},
         {"criterion", ardlkit::to_string(criterion)},
         {"bounds_table", ardlkit::to_string(bounds_table)},
         {"significance", significance},
         {"output_dir", output_dir},
         {"seed", seed},
         {"force", force},
         {"lm_order", lm_order},
         {"coint",
          {{"bandwidth", coint.bandwidth ? Json(*coint.bandwidth) : Json(nullptr)},
           {"leads_lags", coint.leads_lags}}}};
  return j.dump(2);
}

void PipelineConfig::validate() const {
  if (data_path.empty()) invalid("no data file configured");
  if (!fs::exists(data_path)) invalid("data file '" + data_path + "' does not exist");
  if (dependent.empty()) invalid("no dependent variable configured");
  if (regressors.empty()) invalid("no regressors configured");
  if (std::find(regressors.begin(), regressors.end(), dependent) != regressors.end())
    invalid("dependent variable '" + dependent + "' is also listed as a regressor");
  std::set<std::string> seen;
  for (const auto& r : regressors)
    if (!seen.insert(r).second) invalid("regressor '" + r + "' is listed twice");
  if (max_p < 1) invalid("max ARDL lag p must be at least 1");
  if (max_q < 0) invalid("max ARDL lag q must be non-negative");
  if (granger_lags && *granger_lags < 1) invalid("granger lags must be at least 1");
  const std::array<double, 4> levels{0.01, 0.025, 0.05, 0.10};
  if (std::none_of(levels.begin(), levels.end(), [&](double l) { return std::abs(l - significance) < 1e-12; }))
    invalid("significance must be one of 0.01, 0.025, 0.05, 0.10");
  if (lm_order < 1) invalid("lm_order must be at least 1");
  if (coint.leads_lags < 0) invalid("DOLS leads/lags must be non-negative");
  if (coint.bandwidth && *coint.bandwidth < 0) invalid("bandwidth must be non-negative");
}

PreparedData prepare_data(const PipelineConfig& config) {
  const std::string bytes = read_file(config.data_path);
  Dataset data = load_dataset(bytes, config.columns);
  for (const auto& v : config.log_vars) {
    if (!data.contains(v)) invalid("log transform requested for unknown variable '" + v + "'");
    data = transform(data, v, Transform::log());
  }
  ModelSpec spec{config.dependent, config.regressors, true, false};
  spec.validate(data);
  std::vector<TimeSeries> vars{data.get(spec.dependent)};
  for (const auto& r : spec.regressors) vars.push_back(data.get(r));
  return {Dataset(std::move(vars)), spec, fnv1a(bytes)};
}

std::vector<UnitRootSpec> default_unit_root_tests() {
  std::vector<UnitRootSpec> tests;
  for (auto t : {UnitRootTest::Adf, UnitRootTest::Pp, UnitRootTest::DfGls}) {
    UnitRootSpec s;
    s.test = t;
    tests.push_back(s);
  }
  return tests;
}

EstimationResult estimate_model(const PreparedData& prepared, const PipelineConfig& config) {
  EstimationResult r;
  r.order = select_order(prepared.data, prepared.spec, config.max_p, config.max_q, config.criterion);
  r.ardl = fit_ardl(prepared.data, prepared.spec, r.order);
  r.bounds = bounds_f_test(r.ardl, config.bounds_table);
  if (r.bounds.cointegrated_at(config.significance) || config.force)
    r.ecm = fit_ecm(prepared.data, prepared.spec, r.order);
  return r;
}

StabilityResult stability_of(const EcmFit& ecm) {
  const auto w = recursive_residuals(ecm.design);
  const auto k = static_cast<std::size_t>(ecm.design.cols());
  return {cusum_paths(w, k, StabilityKind::Cusum), cusum_paths(w, k, StabilityKind::Cusumsq), ecm.ardl.first_year};
}

const std::string& ReportBundle::file(const std::string& name) const {
  for (const auto& [n, content] : files)
    if (n == name) return content;
  throw Error(ErrorKind::InvalidInput, "report has no file '" + name + "'");
}

const std::vector<std::string>& pipeline_manifest() {
  static const std::vector<std::string> names{"summary.md",  "unitroot.md",    "bounds.md",  "estimate.md",
                                              "robustness.md", "granger.md",   "diagnostics.md", "cusum.svg",
                                              "cusumsq.svg", "report.json"};
  return names;
}

ReportBundle build_report(const PipelineConfig& config) {
  stage("config", "fix the configuration file or flags", [&] {
    config.validate();
    return 0;
  });
  const auto prepared = stage("data", "check the CSV layout and the column mapping", [&] { return prepare_data(config); });
  const Dataset& data = prepared.data;
  ReportBundle bundle;

  const auto stats = summary_stats(data);

  const auto classes = stage("unitroot", "", [&] { return classify_integration(data, default_unit_root_tests()); });
  for (const auto& c : classes)
    if (c.order == IntegrationOrder::I2OrHigher)
      throw StageError("unitroot",
                       Error(ErrorKind::Domain, "variable " + c.variable +
                                                    " is integrated of order two or higher; ARDL bounds testing "
                                                    "admits only I(0) and I(1) variables"),
                       "difference " + c.variable + " once more or drop it from the model");

  const auto est = stage("bounds", "reduce max lags or add observations", [&] { return estimate_model(prepared, config); });
  if (!est.ecm) {
    throw StageError("bounds",
                     Error(ErrorKind::Domain, "no cointegration at " + report::fixed(config.significance * 100, 1) +
                                                  "% (F = " + report::statistic_text(est.bounds.f_statistic) +
                                                  ", upper bound " +
                                                  report::fixed(est.bounds.at(config.significance).i1_bound, 2) + ")"),
                     "rerun with --force to estimate the error-correction model anyway");
  }
  const EcmFit& ecm = *est.ecm;
  if (!est.bounds.cointegrated_at(config.significance))
    bundle.warnings.push_back("error-correction model estimated without a cointegration verdict (forced)");
  if (!ecm.convergent)
    bundle.warnings.push_back("ECT coefficient " + report::coefficient_text(ecm.ect_coefficient) +
                              " lies outside (-2, 0); the model is not convergent");

  for (const auto& c : classes)
    if (c.variable != prepared.spec.dependent && c.order != IntegrationOrder::I1)
      bundle.warnings.push_back("FMOLS, DOLS and CCR assume I(1) regressors; " + c.variable + " is classified " +
                                to_string(c.order));
  const auto robust = stage("robustness", "set coint.leads_lags or coint.bandwidth lower", [&] {
    std::vector<CointFit> fits;
    for (auto m : {CointMethod::Fmols, CointMethod::Dols, CointMethod::Ccr})
      fits.push_back(coint_fit(data, prepared.spec, m, config.coint));
    return fits;
  });

  const auto granger = stage("granger", "set max_lags.granger to a smaller value",
                             [&] { return granger_matrix(data, prepared.spec.dependent, config.granger_lags); });

  const auto diag = stage("diagnostics", "", [&] { return run_diagnostics(ecm.short_run, ecm.design, config.lm_order); });
  const auto stab = stage("stability", "the short-run regression needs more rows than columns",
                          [&] { return stability_of(ecm); });
  SvgOptions svg;
  svg.x_label = "Year";
  svg.x_origin = stab.first_year - 1;

  std::vector<report::RobustnessColumn> columns;
  for (const auto& f : robust) {
    const std::string label = f.method == CointMethod::Fmols ? "FMOLS" : (f.method == CointMethod::Dols ? "DOLS" : "CCR");
    columns.push_back({label, report::rows_of(f)});
  }

  std::ostringstream summary;
  summary << "Input: " << fs::path(config.data_path).filename().string() << " (fnv1a64 " << hex(prepared.input_hash)
          << "), years " << data.start_year() << "-" << data.end_year() << ", " << data.length()
          << " observations\n\n"
          << "Model: " << prepared.spec.dependent << " on";
  for (const auto& r : prepared.spec.regressors) summary << ' ' << r;
  summary << "\n\n"
          << "Selected ARDL order " << est.order.label() << " by " << to_string(config.criterion) << "\n\n"
          << "Bounds F = " << report::statistic_text(est.bounds.f_statistic) << " (k = " << est.bounds.k << ", "
          << to_string(est.bounds.table) << " table): " << to_string(est.bounds.at(config.significance).decision)
          << " at " << report::fixed(config.significance * 100, 1) << "%\n\n"
          << "ECT coefficient " << report::coefficient_text(ecm.ect_coefficient)
          << (ecm.convergent ? " (convergent)" : " (not convergent)") << "\n\n"
          << "CUSUM: " << (stab.cusum.stable ? "stable" : "unstable")
          << "; CUSUM of squares: " << (stab.cusumsq.stable ? "stable" : "unstable") << "\n\n"
          << "Seed: " << config.seed << "\n\n";
  if (!bundle.warnings.empty()) {
    summary << "Warnings:\n\n";
    for (const auto& w : bundle.warnings) summary << "- " << w << "\n";
    summary << "\n";
  }
  summary << report::summary_table(stats);

  std::string bounds_md = report::bounds_table(est.bounds);
  std::string estimate_md = "ARDL" + est.order.label() + ", " + std::to_string(est.ardl.effective_sample) +
                            " observations from " + std::to_string(est.ardl.first_year) + "\n\n" +
                            report::ardl_table(report::rows_of(ecm.long_run), report::rows_of(ecm.short_run)) +
                            "\n* CointEq(-1) is the error-correction term; its coefficient is the adjustment speed.\n";

  Json doc{{"schema_version", 1},
           {"seed", config.seed},
           {"input",
            {{"file", fs::path(config.data_path).filename().string()},
             {"fnv1a64", hex(prepared.input_hash)},
             {"first_year", data.start_year()},
             {"last_year", data.end_year()},
             {"observations", data.length()}}},
           {"model",
            {{"dependent", prepared.spec.dependent},
             {"regressors", prepared.spec.regressors},
             {"criterion", to_string(config.criterion)},
             {"significance", config.significance}}},
           {"summary", report::to_json(stats)},
           {"unit_root", report::to_json(classes)},
           {"bounds", report::to_json(est.bounds)},
           {"estimate", report::to_json(ecm)},
           {"robustness", Json::array()},
           {"granger", report::to_json(granger)},
           {"diagnostics", report::to_json(diag)},
           {"stability", {{"cusum", report::to_json(stab.cusum)}, {"cusumsq", report::to_json(stab.cusumsq)}}},
           {"warnings", bundle.warnings}};
  for (const auto& f : robust) doc["robustness"].push_back(report::to_json(f));

  bundle.files = {
      {"summary.md", document("Summary", summary.str())},
      {"unitroot.md", document("Unit root tests", report::unit_root_table(classes))},
      {"bounds.md", document("Bounds test", bounds_md)},
      {"estimate.md", document("ARDL estimates", estimate_md)},
      {"robustness.md", document("Robustness", report::robustness_table(columns))},
      {"granger.md", document("Granger causality", report::granger_table(granger))},
      {"diagnostics.md", document("Diagnostics", report::diagnostics_table(diag))},
      {"cusum.svg", render_stability_svg(stab.cusum, svg)},
      {"cusumsq.svg", render_stability_svg(stab.cusumsq, svg)},
      {"report.json", doc.dump(2) + "\n"},
  };
  return bundle;
}

ReportBundle run_pipeline(const PipelineConfig& config) {
  if (config.output_dir.empty()) throw Error(ErrorKind::InvalidInput, "no output directory configured");
  ReportBundle bundle = build_report(config);

  const fs::path out(config.output_dir);
  if (fs::exists(out)) {
    if (!fs::is_directory(out)) throw Error(ErrorKind::Io, "output path '" + out.string() + "' is not a directory");
    const auto& manifest = pipeline_manifest();
    for (const auto& entry : fs::directory_iterator(out))
      if (std::find(manifest.begin(), manifest.end(), entry.path().filename().string()) == manifest.end())
        throw Error(ErrorKind::Io, "output directory '" + out.string() +
                                       "' holds files other than a previous run; choose another directory");
  }
  const fs::path staging = out.string() + ".partial";
  std::error_code ec;
  fs::remove_all(staging, ec);
  try {
    fs::create_directories(staging);
    for (const auto& [name, content] : bundle.files) write_text_file((staging / name).string(), content);
    if (fs::exists(out)) fs::remove_all(out);
    fs::rename(staging, out);
  } catch (const fs::filesystem_error& e) {
    fs::remove_all(staging, ec);
    throw Error(ErrorKind::Io, std::string("writing the run directory failed: ") + e.what());
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
  return bundle;
}

}  // namespace ardlkit
