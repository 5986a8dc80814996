#pragma once

#include <string>

#include "ardlkit/diagnostics.hpp"

namespace ardlkit {

struct SvgOptions {
  std::string title;            // defaults to "CUSUM" / "CUSUM of Squares"
  std::string x_label = "Observation";
  int x_origin = 0;             // added to observation indices on the x axis (e.g. first year - 1)
};

/// Standalone SVG 1.1 document: the statistic as a polyline, both 5% bounds
/// as dashed lines, axis ticks and labels, and a caption with the verdict.
std::string render_stability_svg(const StabilityPath& path, const SvgOptions& options = {});

/// Writes `text` to `file`, throwing Io on failure.
void write_text_file(const std::string& file, const std::string& text);

}  // namespace ardlkit
