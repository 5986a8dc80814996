#include "ardlkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ardlkit {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 80.0;

std::string num(double v, int decimals = 2) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double x0, x1, y0, y1;
  double px(double x) const {
    const double w = kWidth - kLeft - kRight;
    return x1 > x0 ? kLeft + (x - x0) / (x1 - x0) * w : kLeft + w / 2.0;
  }
  double py(double y) const { return kTop + (y1 - y) / (y1 - y0) * (kHeight - kTop - kBottom); }
};

std::string points(const Frame& f, const std::vector<double>& xs, const std::vector<double>& ys) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += num(f.px(xs[i])) + "," + num(f.py(ys[i]));
  }
  return out;
}

}  // namespace

std::string render_stability_svg(const StabilityPath& path, const SvgOptions& options) {
  if (path.path.empty()) throw Error(ErrorKind::InvalidInput, "stability path is empty");
  const std::size_t n = path.path.size();
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i)
    xs[i] = static_cast<double>(options.x_origin) + static_cast<double>(path.start_index + i);

  double lo = 0.0, hi = 0.0;
  for (const auto* series : {&path.path, &path.lower_bound, &path.upper_bound})
    for (double v : *series) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (hi - lo < 1e-12) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  const Frame f{xs.front(), xs.back(), lo - pad, hi + pad};

  const bool cusum = path.kind == StabilityKind::Cusum;
  const std::string title = options.title.empty() ? (cusum ? "CUSUM" : "CUSUM of Squares") : options.title;
  const std::string verdict = path.stable ? "stable" : "unstable";

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidth, 0) << "\" height=\""
    << num(kHeight, 0) << "\" viewBox=\"0 0 " << num(kWidth, 0) << ' ' << num(kHeight, 0) << "\">\n"
    << "<title>" << escape(title) << "</title>\n"
    << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth, 0) << "\" height=\"" << num(kHeight, 0)
    << "\" fill=\"white\"/>\n"
    << "<text x=\"" << num(kWidth / 2.0) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
    << "font-size=\"16\">" << escape(title) << "</text>\n";

  const double plot_bottom = kHeight - kBottom;
  s << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
    << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft) << "\" y2=\""
    << num(plot_bottom) << "\"/>\n"
    << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(plot_bottom) << "\" x2=\"" << num(kWidth - kRight)
    << "\" y2=\"" << num(plot_bottom) << "\"/>\n"
    << "</g>\n";

  s << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  constexpr int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double yv = f.y0 + (f.y1 - f.y0) * i / (kTicks - 1);
    const double y = f.py(yv);
    s << "<line x1=\"" << num(kLeft - 4) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft) << "\" y2=\"" << num(y)
      << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">" << num(yv)
      << "</text>\n";
  }
  const std::size_t xticks = std::min<std::size_t>(n, kTicks);
  for (std::size_t i = 0; i < xticks; ++i) {
    const std::size_t idx = xticks == 1 ? 0 : i * (n - 1) / (xticks - 1);
    const double x = f.px(xs[idx]);
    s << "<line x1=\"" << num(x) << "\" y1=\"" << num(plot_bottom) << "\" x2=\"" << num(x) << "\" y2=\""
      << num(plot_bottom + 4) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << num(x) << "\" y=\"" << num(plot_bottom + 16) << "\" text-anchor=\"middle\">"
      << num(xs[idx], 0) << "</text>\n";
  }
  s << "<text x=\"" << num(kLeft + (kWidth - kLeft - kRight) / 2.0) << "\" y=\"" << num(plot_bottom + 34)
    << "\" text-anchor=\"middle\">" << escape(options.x_label) << "</text>\n"
    << "<text x=\"16\" y=\"" << num(kTop + (plot_bottom - kTop) / 2.0) << "\" text-anchor=\"middle\" "
    << "transform=\"rotate(-90 16 " << num(kTop + (plot_bottom - kTop) / 2.0) << ")\">" << escape(title)
    << "</text>\n"
    << "</g>\n";

  s << "<polyline id=\"lower\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\" "
    << "points=\"" << points(f, xs, path.lower_bound) << "\"/>\n"
    << "<polyline id=\"upper\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\" "
    << "points=\"" << points(f, xs, path.upper_bound) << "\"/>\n"
    << "<polyline id=\"statistic\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\""
    << points(f, xs, path.path) << "\"/>\n";

  std::string caption = cusum ? "CUSUM" : "CUSUM of squares";
  caption.append(" with 5% significance bounds (dashed). Verdict: ").append(verdict);
  if (path.extrapolated_bounds) caption += " (bounds extrapolated)";
  s << "<text x=\"" << num(kWidth / 2.0) << "\" y=\"" << num(kHeight - 14) << "\" text-anchor=\"middle\" "
    << "font-family=\"sans-serif\" font-size=\"12\">" << escape(caption) << "</text>\n"
    << "</svg>\n";
  return s.str();
}

void write_text_file(const std::string& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + file + "' for writing");
  out << text;
  if (!out.flush()) throw Error(ErrorKind::Io, "failed writing '" + file + "'");
}

}  // namespace ardlkit
