#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

#include "ardlkit/svg.hpp"

using namespace ardlkit;

namespace {

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

StabilityPath fixture_path() {
  const std::vector<double> w{0.3, -1.2, 0.8, 0.1, -0.4, 1.5, -0.2, 0.9, -1.1, 0.6, 0.05, -0.7, 1.3, -0.3, 0.4};
  return cusum_paths(w, 3, StabilityKind::Cusum);
}

}  // namespace

TEST_SUITE("svg") {
  TEST_CASE("golden CUSUM figure") {
    SvgOptions opt;
    opt.x_label = "Year";
    opt.x_origin = 1993;
    const std::string svg = render_stability_svg(fixture_path(), opt);
    const std::filesystem::path golden = std::filesystem::path(ARDLKIT_FIXTURE_DIR) / "cusum_golden.svg";
    if (std::getenv("ARDLKIT_UPDATE_GOLDEN")) write_text_file(golden.string(), svg);
    REQUIRE(std::filesystem::exists(golden));
    CHECK(svg == read(golden));
  }

  TEST_CASE("document structure") {
    const std::string svg = render_stability_svg(fixture_path());
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    CHECK(svg.find("id=\"statistic\"") != std::string::npos);
    CHECK(svg.find("id=\"lower\"") != std::string::npos);
    CHECK(svg.find("id=\"upper\"") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
  }

  TEST_CASE("flat path is stable and drawn as a horizontal line") {
    const auto p = cusum_paths(std::vector<double>(20, 0.0), 2, StabilityKind::Cusum);
    const std::string svg = render_stability_svg(p);
    CHECK(svg.find("Verdict: stable") != std::string::npos);
    const auto start = svg.find("id=\"statistic\"");
    const auto pts = svg.find("points=\"", start) + 8;
    const auto end = svg.find('"', pts);
    std::istringstream in(svg.substr(pts, end - pts));
    std::string pair;
    std::string first_y;
    while (in >> pair) {
      const std::string y = pair.substr(pair.find(',') + 1);
      if (first_y.empty()) first_y = y;
      CHECK(y == first_y);
    }
  }

  TEST_CASE("planted break is unstable") {
    std::vector<double> w = testutil::normals(60, 3);
    for (std::size_t i = 30; i < 60; ++i) w[i] = 6.0 * w[i];
    const auto p = cusum_paths(w, 2, StabilityKind::Cusumsq);
    CHECK_FALSE(p.stable);
    CHECK(render_stability_svg(p).find("Verdict: unstable") != std::string::npos);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(render_stability_svg(StabilityPath{}), Error);
    try {
      write_text_file("/nonexistent-dir/x.svg", "x");
      FAIL("expected Io");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Io);
    }
  }
}
