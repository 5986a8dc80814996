#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ardlkit/ardl.hpp"
#include "ardlkit/causality.hpp"
#include "ardlkit/coint.hpp"
#include "ardlkit/dataio.hpp"
#include "ardlkit/diagnostics.hpp"
#include "ardlkit/unitroot.hpp"

namespace ardlkit {

/// Run configuration. Loaded from a JSON document (see docs/config.md) and
/// overridable field by field from the command line.
struct PipelineConfig {
  std::string data_path;
  ColumnSchema columns;               // empty: keep CSV headers
  std::vector<std::string> log_vars;  // logged in place under the name L<var>
  std::string dependent;
  std::vector<std::string> regressors;
  int max_p = 2;
  int max_q = 2;
  GrangerLags granger_lags;  // nullopt: automatic
  Criterion criterion = Criterion::Aic;
  BoundsTable bounds_table = BoundsTable::General;
  double significance = 0.05;
  std::string output_dir;
  std::uint64_t seed = 0;
  bool force = false;
  int lm_order = 2;
  CointTuning coint;

  /// Parses `json_text`; relative data paths resolve against `base_dir`.
  static PipelineConfig from_json(const std::string& json_text, const std::string& base_dir = "");
  static PipelineConfig from_file(const std::string& path);
  std::string to_json() const;

  /// Checks everything that does not need the data: names, ranges, paths.
  void validate() const;
};

/// The configured dataset after column mapping and log transforms, restricted
/// to the model variables (dependent first).
struct PreparedData {
  Dataset data;
  ModelSpec spec;
  std::uint64_t input_hash = 0;  // FNV-1a of the CSV bytes
};

PreparedData prepare_data(const PipelineConfig& config);

std::vector<UnitRootSpec> default_unit_root_tests();

struct EstimationResult {
  ArdlOrder order;
  ArdlFit ardl;
  BoundsResult bounds;
  std::optional<EcmFit> ecm;  // absent when not cointegrated and not forced
};

/// Order selection, bounds test and (if cointegrated or forced) the ECM.
EstimationResult estimate_model(const PreparedData& prepared, const PipelineConfig& config);

struct StabilityResult {
  StabilityPath cusum;
  StabilityPath cusumsq;
  int first_year = 0;  // calendar year of observation index 1 in the short-run regression
};

StabilityResult stability_of(const EcmFit& ecm);

struct ReportBundle {
  std::vector<std::pair<std::string, std::string>> files;  // name -> contents, manifest order
  std::vector<std::string> warnings;

  const std::string& file(const std::string& name) const;
};

/// Names written by run_pipeline, in order.
const std::vector<std::string>& pipeline_manifest();

/// Unit roots, bounds, ARDL/ECM, robustness, Granger, diagnostics, stability.
/// Fails before writing anything when a stage fails; the message names the stage.
ReportBundle build_report(const PipelineConfig& config);

/// build_report followed by an all-or-nothing write into config.output_dir.
ReportBundle run_pipeline(const PipelineConfig& config);

/// Error raised by a pipeline stage; what() starts with "<stage>: ".
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause, const std::string& hint);
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace ardlkit
