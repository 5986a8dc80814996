#include <cmath>
#include <functional>

#include "doctest.h"
#include "helpers.hpp"

#include "ardlkit/dataio.hpp"

using namespace ardlkit;

namespace {

std::string csv_rows(int first, int count) {
  std::string s = "year,CO2,GDP\n";
  for (int i = 0; i < count; ++i)
    s += std::to_string(first + i) + "," + std::to_string(100 + i) + "," + std::to_string(50 + 2 * i) + "\n";
  return s;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

}  // namespace

TEST_SUITE("dataio") {
  TEST_CASE("csv round trip keeps names, years and values") {
    const Dataset d = load_dataset(csv_rows(1990, 32));
    CHECK(d.width() == 2);
    CHECK(d.length() == 32);
    CHECK(d.start_year() == 1990);
    CHECK(d.end_year() == 2021);
    CHECK(d.get("GDP")[3] == 56.0);
    const Dataset again = load_dataset(to_csv(d));
    CHECK(again.names() == d.names());
    CHECK(again.get("CO2").values() == d.get("CO2").values());
  }

  TEST_CASE("column schema renames and selects") {
    const Dataset d = load_dataset(csv_rows(2000, 12), {{"GDP", "Y"}});
    CHECK(d.names() == std::vector<std::string>{"Y"});
    CHECK(kind_of([] { load_dataset(csv_rows(2000, 12), {{"POP", "P"}}); }) == ErrorKind::InvalidInput);
  }

  TEST_CASE("malformed input is rejected") {
    CHECK(kind_of([] { load_dataset(""); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { load_dataset("t,a\n1,2\n"); }) == ErrorKind::InvalidInput);
    std::string gap = csv_rows(1990, 12);
    gap.replace(gap.find("1995"), 4, "1996");
    CHECK(kind_of([&] { load_dataset(gap); }) == ErrorKind::InvalidInput);
    std::string blank = csv_rows(1990, 12);
    blank.replace(blank.find("1993,103"), 8, "1993,");
    CHECK(kind_of([&] { load_dataset(blank); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { load_dataset(csv_rows(1990, 5)); }) == ErrorKind::TooShort);
    CHECK(kind_of([] { load_dataset_file("/nonexistent/file.csv"); }) == ErrorKind::Io);
  }

  TEST_CASE("log, diff and lag transforms") {
    const Dataset d = load_dataset(csv_rows(1990, 12));
    const Dataset logged = transform(d, "CO2", Transform::log());
    CHECK(logged.contains("LCO2"));
    CHECK(logged.get("LCO2")[0] == doctest::Approx(std::log(100.0)).epsilon(1e-15));
    CHECK(logged.get("LCO2").lineage() == std::vector<std::string>{"log"});

    const Dataset diffed = transform(d, "GDP", Transform::diff());
    CHECK(diffed.length() == 11);
    CHECK(diffed.start_year() == 1991);
    CHECK(diffed.get("DGDP")[0] == 2.0);
    CHECK(diffed.get("CO2")[0] == 101.0);

    const Dataset lagged = transform(d, "CO2", Transform::lag(2));
    CHECK(lagged.get("CO2(-2)")[0] == 100.0);
    CHECK(lagged.get("CO2")[0] == 102.0);

    CHECK(derived_name("X", Transform::diff(2)) == "D2X");
    CHECK(kind_of([&] { transform(d, "CO2", Transform::diff(12)); }) == ErrorKind::TooShort);
  }

  TEST_CASE("log of a non-positive value is a domain error") {
    const Dataset d = testutil::dataset({{"a", std::vector<double>(12, 1.0)}, {"b", std::vector<double>(12, 0.0)}});
    CHECK(kind_of([&] { transform(d, "b", Transform::log()); }) == ErrorKind::Domain);
  }

  TEST_CASE("summary statistics use the sample standard deviation") {
    const Dataset d = testutil::dataset({{"a", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}});
    const auto s = summary_stats(d);
    REQUIRE(s.rows.size() == 1);
    CHECK(s.rows[0].count == 10);
    CHECK(s.rows[0].mean == doctest::Approx(5.5));
    CHECK(s.rows[0].std_dev == doctest::Approx(std::sqrt(55.0 / 6.0)));
    CHECK(s.rows[0].min == 1.0);
    CHECK(s.rows[0].max == 10.0);
  }

  TEST_CASE("model spec rejects the dependent among regressors") {
    const Dataset d = load_dataset(csv_rows(1990, 12));
    ModelSpec spec{"CO2", {"GDP", "CO2"}};
    CHECK(kind_of([&] { spec.validate(d); }) == ErrorKind::InvalidInput);
    spec.regressors = {"GDP"};
    CHECK_NOTHROW(spec.validate(d));
  }
}
