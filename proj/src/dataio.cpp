#include "ardlkit/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace ardlkit {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::TooShort: return "too short";
    case ErrorKind::RankDeficient: return "rank deficient";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

TimeSeries::TimeSeries(std::string name, int start_year, std::vector<double> values,
                       std::vector<std::string> lineage)
    : name_(std::move(name)),
      start_year_(start_year),
      values_(std::move(values)),
      lineage_(std::move(lineage)) {
  if (name_.empty()) throw Error(ErrorKind::InvalidInput, "series name is empty");
  if (values_.empty()) throw Error(ErrorKind::InvalidInput, "series '" + name_ + "' is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorKind::InvalidInput,
                  "series '" + name_ + "' has a non-finite value in year " +
                      std::to_string(start_year_ + static_cast<int>(i)));
    }
  }
}

Dataset::Dataset(std::vector<TimeSeries> variables) : variables_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!seen.insert(v.name()).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate variable name '" + v.name() + "'");
    }
    if (v.start_year() != variables_.front().start_year() ||
        v.size() != variables_.front().size()) {
      throw Error(ErrorKind::InvalidInput,
                  "variable '" + v.name() + "' is not aligned with '" +
                      variables_.front().name() + "'");
    }
  }
}

int Dataset::start_year() const { return empty() ? 0 : variables_.front().start_year(); }
int Dataset::end_year() const { return empty() ? 0 : variables_.front().end_year(); }
std::size_t Dataset::length() const { return empty() ? 0 : variables_.front().size(); }

bool Dataset::contains(std::string_view name) const {
  return std::any_of(variables_.begin(), variables_.end(),
                     [&](const TimeSeries& v) { return v.name() == name; });
}

const TimeSeries& Dataset::get(std::string_view name) const {
  for (const auto& v : variables_) {
    if (v.name() == name) return v;
  }
  throw Error(ErrorKind::InvalidInput, "unknown variable '" + std::string(name) + "'");
}

std::vector<std::string> Dataset::names() const {
  std::vector<std::string> out;
  out.reserve(variables_.size());
  for (const auto& v : variables_) out.push_back(v.name());
  return out;
}

Dataset Dataset::tail(std::size_t length) const {
  if (length == 0 || length > this->length()) {
    throw Error(ErrorKind::TooShort, "cannot take a tail of length " + std::to_string(length));
  }
  const std::size_t drop = this->length() - length;
  std::vector<TimeSeries> out;
  for (const auto& v : variables_) {
    out.emplace_back(v.name(), v.start_year() + static_cast<int>(drop),
                     std::vector<double>(v.values().begin() + drop, v.values().end()),
                     v.lineage());
  }
  return Dataset(std::move(out));
}

void ModelSpec::validate(const Dataset& data) const {
  if (dependent.empty()) throw Error(ErrorKind::InvalidInput, "model has no dependent variable");
  if (!data.contains(dependent)) {
    throw Error(ErrorKind::InvalidInput, "dependent variable '" + dependent + "' not in dataset");
  }
  std::set<std::string> seen;
  for (const auto& r : regressors) {
    if (r == dependent) {
      throw Error(ErrorKind::InvalidInput,
                  "dependent variable '" + dependent + "' is listed among the regressors");
    }
    if (!data.contains(r)) {
      throw Error(ErrorKind::InvalidInput, "regressor '" + r + "' not in dataset");
    }
    if (!seen.insert(r).second) {
      throw Error(ErrorKind::InvalidInput, "regressor '" + r + "' listed twice");
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_row(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    cells.push_back(trim(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return cells;
}

bool parse_double(std::string_view cell, double& out) {
  if (cell.empty()) return false;
  if (cell.front() == '+') cell.remove_prefix(1);
  const auto* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

bool parse_year(std::string_view cell, int& out) {
  const auto* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, out);
  return !cell.empty() && ec == std::errc() && ptr == end;
}

}  // namespace

Dataset load_dataset(std::string_view csv_text, const ColumnSchema& schema) {
  if (csv_text.size() >= 3 && static_cast<unsigned char>(csv_text[0]) == 0xEF &&
      static_cast<unsigned char>(csv_text[1]) == 0xBB && static_cast<unsigned char>(csv_text[2]) == 0xBF) {
    csv_text.remove_prefix(3);
  }
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= csv_text.size()) {
    auto nl = csv_text.find('\n', pos);
    auto line = trim(csv_text.substr(pos, nl == std::string_view::npos ? csv_text.npos : nl - pos));
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw Error(ErrorKind::InvalidInput, "input has no header row");

  const auto header = split_row(lines.front());
  if (header.empty() || header.front() != "year") {
    throw Error(ErrorKind::InvalidInput, "first column must be 'year'");
  }
  if (header.size() < 2) throw Error(ErrorKind::InvalidInput, "input has no data columns");

  // (column index, variable name)
  std::vector<std::pair<std::size_t, std::string>> selected;
  if (schema.empty()) {
    for (std::size_t c = 1; c < header.size(); ++c) selected.emplace_back(c, std::string(header[c]));
  } else {
    for (const auto& [column, variable] : schema) {
      auto it = std::find(header.begin(), header.end(), column);
      if (it == header.end() || it == header.begin()) {
        throw Error(ErrorKind::InvalidInput, "missing column '" + column + "'");
      }
      selected.emplace_back(static_cast<std::size_t>(it - header.begin()), variable);
    }
  }

  const std::size_t rows = lines.size() - 1;
  std::vector<int> years(rows);
  std::vector<std::vector<double>> columns(selected.size(), std::vector<double>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto cells = split_row(lines[r + 1]);
    if (cells.size() != header.size()) {
      throw Error(ErrorKind::InvalidInput, "row " + std::to_string(r + 2) + " has " +
                                               std::to_string(cells.size()) + " cells, expected " +
                                               std::to_string(header.size()));
    }
    if (!parse_year(cells[0], years[r])) {
      throw Error(ErrorKind::InvalidInput, "row " + std::to_string(r + 2) + ": year '" +
                                               std::string(cells[0]) + "' is not an integer");
    }
    for (std::size_t s = 0; s < selected.size(); ++s) {
      const auto cell = cells[selected[s].first];
      if (!parse_double(cell, columns[s][r])) {
        throw Error(ErrorKind::InvalidInput, "non-numeric cell '" + std::string(cell) + "' in column '" +
                                                 std::string(header[selected[s].first]) + "', year " +
                                                 std::to_string(years[r]));
      }
    }
  }

  for (std::size_t r = 1; r < rows; ++r) {
    if (years[r] == years[r - 1]) {
      throw Error(ErrorKind::InvalidInput, "duplicate year " + std::to_string(years[r]));
    }
    if (years[r] != years[r - 1] + 1) {
      if (years[r] > years[r - 1] + 1) {
        throw Error(ErrorKind::InvalidInput, "gap in year column: year " +
                                                 std::to_string(years[r - 1] + 1) + " is missing");
      }
      throw Error(ErrorKind::InvalidInput, "year column is not increasing at " + std::to_string(years[r]));
    }
  }
  if (rows < kMinObservations) {
    throw Error(ErrorKind::TooShort, "too short: " + std::to_string(rows) + " rows, need at least " +
                                         std::to_string(kMinObservations));
  }

  std::vector<TimeSeries> vars;
  for (std::size_t s = 0; s < selected.size(); ++s) {
    vars.emplace_back(selected[s].second, years.front(), std::move(columns[s]));
  }
  return Dataset(std::move(vars));
}

Dataset load_dataset_file(const std::string& path, const ColumnSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_dataset(buf.str(), schema);
}

std::string to_csv(const Dataset& data) {
  std::ostringstream out;
  out << "year";
  for (const auto& v : data.variables()) out << ',' << v.name();
  out << '\n';
  char cell[64];
  for (std::size_t i = 0; i < data.length(); ++i) {
    out << data.start_year() + static_cast<int>(i);
    for (const auto& v : data.variables()) {
      auto [ptr, ec] = std::to_chars(cell, cell + sizeof(cell), v[i]);
      out << ',' << std::string_view(cell, static_cast<std::size_t>(ptr - cell));
    }
    out << '\n';
  }
  return out.str();
}

std::string derived_name(const std::string& name, const Transform& t) {
  switch (t.kind) {
    case TransformKind::Log: return "L" + name;
    case TransformKind::Diff: return t.order == 1 ? "D" + name : "D" + std::to_string(t.order) + name;
    case TransformKind::Lag: return name + "(-" + std::to_string(t.order) + ")";
  }
  return name;
}

Dataset transform(const Dataset& data, const std::string& variable, const Transform& t,
                  std::optional<std::string> out_name) {
  const TimeSeries& src = data.get(variable);
  const std::string target = out_name.value_or(derived_name(variable, t));
  if (target != variable && data.contains(target)) {
    throw Error(ErrorKind::InvalidInput, "output variable '" + target + "' already exists");
  }

  std::vector<double> values;
  std::string step;
  std::size_t shrink = 0;
  const auto& x = src.values();
  switch (t.kind) {
    case TransformKind::Log: {
      values.resize(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0)) {
          throw Error(ErrorKind::Domain, "log of non-positive value " + std::to_string(x[i]) +
                                             " in '" + variable + "', year " +
                                             std::to_string(src.start_year() + static_cast<int>(i)));
        }
        values[i] = std::log(x[i]);
      }
      step = "log";
      break;
    }
    case TransformKind::Diff: {
      if (t.order < 1) throw Error(ErrorKind::InvalidInput, "difference order must be >= 1");
      shrink = static_cast<std::size_t>(t.order);
      if (shrink >= x.size()) {
        throw Error(ErrorKind::TooShort, "difference order " + std::to_string(t.order) +
                                             " >= series length " + std::to_string(x.size()));
      }
      values = x;
      for (int d = 0; d < t.order; ++d) {
        for (std::size_t i = values.size() - 1; i > 0; --i) values[i] -= values[i - 1];
        values.erase(values.begin());
      }
      step = "diff-" + std::to_string(t.order);
      break;
    }
    case TransformKind::Lag: {
      if (t.order < 1) throw Error(ErrorKind::InvalidInput, "lag order must be >= 1");
      shrink = static_cast<std::size_t>(t.order);
      if (shrink >= x.size()) {
        throw Error(ErrorKind::TooShort, "lag order " + std::to_string(t.order) +
                                             " >= series length " + std::to_string(x.size()));
      }
      values.assign(x.begin(), x.end() - static_cast<std::ptrdiff_t>(shrink));
      step = "lag-" + std::to_string(t.order);
      break;
    }
  }

  auto lineage = src.lineage();
  lineage.push_back(step);
  const int start = data.start_year() + static_cast<int>(shrink);

  std::vector<TimeSeries> out;
  bool replaced = false;
  for (const auto& v : data.variables()) {
    if (v.name() == target) {
      out.emplace_back(target, start, values, lineage);
      replaced = true;
    } else {
      out.emplace_back(v.name(), start,
                       std::vector<double>(v.values().begin() + static_cast<std::ptrdiff_t>(shrink),
                                           v.values().end()),
                       v.lineage());
    }
  }
  if (!replaced) out.emplace_back(target, start, std::move(values), std::move(lineage));
  return Dataset(std::move(out));
}

SummaryStats summary_stats(const Dataset& data) {
  SummaryStats stats;
  for (const auto& v : data.variables()) {
    const auto& x = v.values();
    VariableSummary row;
    row.name = v.name();
    row.count = x.size();
    row.mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    double ss = 0.0;
    for (double xi : x) ss += (xi - row.mean) * (xi - row.mean);
    row.std_dev = x.size() > 1 ? std::sqrt(ss / static_cast<double>(x.size() - 1)) : 0.0;
    auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    row.min = *lo;
    row.max = *hi;
    stats.rows.push_back(std::move(row));
  }
  return stats;
}

}  // namespace ardlkit
