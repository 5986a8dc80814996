#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

#include "ardlkit/pipeline.hpp"
#include "ardlkit/report.hpp"

using namespace ardlkit;
namespace fs = std::filesystem;

namespace {

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

PipelineConfig sample_config(const fs::path& out) {
  PipelineConfig c = PipelineConfig::from_file((fs::path(ARDLKIT_SOURCE_DIR) / "config" / "sample_usa.json").string());
  c.output_dir = out.string();
  return c;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ardlkit-test-" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("sample run writes the full manifest") {
    const fs::path out = scratch("manifest");
    const auto bundle = run_pipeline(sample_config(out));
    const std::vector<std::string> expected{"summary.md",   "unitroot.md",    "bounds.md", "estimate.md",
                                            "robustness.md", "granger.md",    "diagnostics.md", "cusum.svg",
                                            "cusumsq.svg",  "report.json"};
    CHECK(pipeline_manifest() == expected);
    for (const auto& name : expected) CHECK(fs::exists(out / name));
    CHECK_FALSE(fs::exists(fs::path(out.string() + ".partial")));
    CHECK(read(out / "report.json") == bundle.file("report.json"));
    fs::remove_all(out);
  }

  TEST_CASE("two runs with the same seed are byte-identical") {
    const fs::path a = scratch("det-a"), b = scratch("det-b");
    run_pipeline(sample_config(a));
    run_pipeline(sample_config(b));
    for (const auto& name : pipeline_manifest()) CHECK(read(a / name) == read(b / name));
    fs::remove_all(a);
    fs::remove_all(b);
  }

  TEST_CASE("report.json content") {
    const auto bundle = build_report(sample_config(scratch("json")));
    const auto j = report::Json::parse(bundle.file("report.json"));
    CHECK(j["schema_version"] == 1);
    CHECK(j["input"]["file"] == "sample_usa.csv");
    CHECK(j["seed"] == 20240611);
    for (const char* key : {"summary", "unit_root", "bounds", "estimate", "robustness", "granger", "diagnostics",
                            "stability", "warnings"})
      CHECK(j.contains(key));
    CHECK(bundle.file("report.json").find(ARDLKIT_SOURCE_DIR) == std::string::npos);

    // Rounded markdown numbers come from the full-precision JSON values.
    const double ect = j["estimate"]["ect_coefficient"].get<double>();
    CHECK(bundle.file("estimate.md").find("| CointEq(-1)* | " + report::coefficient_text(ect)) != std::string::npos);
    const double f = j["bounds"]["f_statistic"].get<double>();
    CHECK(bundle.file("bounds.md").find("| F-statistic | " + report::statistic_text(f) + " |") != std::string::npos);
  }

  TEST_CASE("every Table layout and both figures are emitted") {
    const auto bundle = build_report(sample_config(scratch("layout")));
    CHECK(bundle.file("summary.md").find("### Summary Statistics") != std::string::npos);
    CHECK(bundle.file("unitroot.md").find("### Results of unit root test") != std::string::npos);
    CHECK(bundle.file("bounds.md").find("### Results of ARDL bound test") != std::string::npos);
    CHECK(bundle.file("estimate.md").find("### Results of ARDL short-run and Long-run") != std::string::npos);
    CHECK(bundle.file("robustness.md").find("### Results of Robustness check") != std::string::npos);
    CHECK(bundle.file("granger.md").find("### Results of Pairwise Granger Causality test") != std::string::npos);
    CHECK(bundle.file("diagnostics.md").find("### The results of diagnostic tests") != std::string::npos);
    CHECK(bundle.file("cusum.svg").find("CUSUM") != std::string::npos);
    CHECK(bundle.file("cusumsq.svg").find("CUSUM of Squares") != std::string::npos);
    for (const char* f : {"unitroot.md", "estimate.md", "robustness.md"})
      CHECK(bundle.file(f).find(report::kStarLegend) != std::string::npos);
  }

  TEST_CASE("dependent among regressors fails validation before any computation") {
    PipelineConfig c = sample_config(scratch("invalid"));
    c.regressors.push_back("LCO2");
    CHECK_THROWS_AS(c.validate(), Error);
    CHECK_THROWS_AS(run_pipeline(c), Error);
    CHECK_FALSE(fs::exists(c.output_dir));
  }

  TEST_CASE("config parsing") {
    const auto c = PipelineConfig::from_json(
        R"({"data": "d.csv", "dependent": "y", "regressors": ["x"], "max_lags": {"granger": 3},
            "bounds_table": "paper-table4", "significance": 0.01})",
        "/base");
    CHECK(c.data_path == "/base/d.csv");
    CHECK(c.granger_lags == 3);
    CHECK(c.bounds_table == BoundsTable::PaperTable4);
    CHECK_THROWS_AS(PipelineConfig::from_json(R"({"data": "d.csv", "colour": 1})"), Error);
    CHECK_THROWS_AS(PipelineConfig::from_json(R"({"data": "d.csv", "significance": 0.2})").validate(), Error);
    CHECK_THROWS_AS(PipelineConfig::from_json("{not json"), Error);
    const auto again = PipelineConfig::from_json(c.to_json());
    CHECK(again.bounds_table == c.bounds_table);
    CHECK(again.regressors == c.regressors);
  }

  TEST_CASE("an I(2) variable halts the run and leaves nothing behind") {
    const fs::path dir = scratch("i2");
    fs::create_directories(dir);
    auto e = testutil::normals(40, 2);
    const auto rw = testutil::cumsum(e);
    const auto i2 = testutil::cumsum(testutil::cumsum(testutil::normals(40, 3)));
    std::ofstream csv(dir / "d.csv");
    csv << "year,y,x\n";
    for (std::size_t t = 0; t < 40; ++t) csv << 1980 + t << "," << rw[t] << "," << i2[t] << "\n";
    csv.close();
    PipelineConfig c;
    c.data_path = (dir / "d.csv").string();
    c.dependent = "y";
    c.regressors = {"x"};
    c.output_dir = (dir / "out").string();
    try {
      run_pipeline(c);
      FAIL("expected a stage error");
    } catch (const StageError& err) {
      CHECK(err.stage() == "unitroot");
      CHECK(std::string(err.what()).find("order two") != std::string::npos);
    }
    CHECK_FALSE(fs::exists(dir / "out"));
    CHECK_FALSE(fs::exists(dir / "out.partial"));
    fs::remove_all(dir);
  }
}
