#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ardlkit/error.hpp"

namespace ardlkit {

/// Minimum number of annual observations accepted at load time.
inline constexpr std::size_t kMinObservations = 10;

/// One annual series. Values are complete (no gaps) and years consecutive.
class TimeSeries {
 public:
  TimeSeries(std::string name, int start_year, std::vector<double> values,
             std::vector<std::string> lineage = {});

  const std::string& name() const { return name_; }
  int start_year() const { return start_year_; }
  int end_year() const { return start_year_ + static_cast<int>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  /// Applied transforms, oldest first ("log", "diff-1", "lag-2").
  const std::vector<std::string>& lineage() const { return lineage_; }

 private:
  std::string name_;
  int start_year_;
  std::vector<double> values_;
  std::vector<std::string> lineage_;
};

/// Variables sharing one consecutive year index.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<TimeSeries> variables);

  int start_year() const;
  int end_year() const;
  std::size_t length() const;
  std::size_t width() const { return variables_.size(); }
  bool empty() const { return variables_.empty(); }

  const std::vector<TimeSeries>& variables() const { return variables_; }
  bool contains(std::string_view name) const;
  const TimeSeries& get(std::string_view name) const;
  std::vector<std::string> names() const;

  /// Copy restricted to the trailing `length` observations of every series.
  Dataset tail(std::size_t length) const;

 private:
  std::vector<TimeSeries> variables_;
};

/// Regression roles over named Dataset variables.
struct ModelSpec {
  std::string dependent;
  std::vector<std::string> regressors;
  bool intercept = true;
  bool trend = false;

  /// Throws InvalidInput if dependent is a regressor or a name is unresolved.
  void validate(const Dataset& data) const;
};

struct VariableSummary {
  std::string name;
  std::size_t count = 0;
  double mean = 0.0;
  double std_dev = 0.0;  // sample (n - 1) standard deviation
  double min = 0.0;
  double max = 0.0;
};

struct SummaryStats {
  std::vector<VariableSummary> rows;
};

/// Column name in the file -> variable name in the Dataset. Empty means every
/// non-year column keeps its header name.
using ColumnSchema = std::vector<std::pair<std::string, std::string>>;

Dataset load_dataset(std::string_view csv_text, const ColumnSchema& schema = {});
Dataset load_dataset_file(const std::string& path, const ColumnSchema& schema = {});

/// Writes `year,<names...>` with round-trip precision.
std::string to_csv(const Dataset& data);

enum class TransformKind { Log, Diff, Lag };

struct Transform {
  TransformKind kind = TransformKind::Log;
  int order = 1;  // diff order d or lag k; ignored for log

  static Transform log() { return {TransformKind::Log, 1}; }
  static Transform diff(int d = 1) { return {TransformKind::Diff, d}; }
  static Transform lag(int k = 1) { return {TransformKind::Lag, k}; }
};

/// Default output name: "L<name>" for log, "D<name>" for diff(1),
/// "D<d><name>" for higher orders, "<name>(-k)" for lags.
std::string derived_name(const std::string& name, const Transform& t);

/// Applies `t` to one variable. The result replaces the variable when
/// `out_name` equals the source name, otherwise it is appended. Diff and lag
/// shorten the shared index from the front; every series is re-aligned.
Dataset transform(const Dataset& data, const std::string& variable, const Transform& t,
                  std::optional<std::string> out_name = std::nullopt);

SummaryStats summary_stats(const Dataset& data);

}  // namespace ardlkit
