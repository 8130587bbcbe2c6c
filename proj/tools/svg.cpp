#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace wgrover::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr int kTicks = 5;

constexpr std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c",
                                                "#ff7f0e", "#9467bd", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

struct Frame {
  Range x;
  Range y;

  double px(double v) const { return kLeft + (v - x.lo) / (x.hi - x.lo) * (kWidth - kLeft - kRight); }
  double py(double v) const {
    return kHeight - kBottom - (v - y.lo) / (y.hi - y.lo) * (kHeight - kTop - kBottom);
  }
};

void open_svg(std::ostream& os, const PlotSpec& spec, const Frame& f) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
     << num(kHeight) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
     << escape(spec.title) << "</text>\n";
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  os << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\""
     << num(y0) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0) << "\" y2=\""
     << num(y1) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double t = static_cast<double>(i) / kTicks;
    const double xv = f.x.lo + t * (f.x.hi - f.x.lo);
    const double yv = f.y.lo + t * (f.y.hi - f.y.lo);
    os << "<text x=\"" << num(f.px(xv)) << "\" y=\"" << num(y0 + 16)
       << "\" text-anchor=\"middle\">" << tick_label(xv) << "</text>\n";
    os << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(f.py(yv) + 4)
       << "\" text-anchor=\"end\">" << tick_label(yv) << "</text>\n";
  }
  os << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(kHeight - 12)
     << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n";
  os << "<text x=\"16\" y=\"" << num((y0 + y1) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << num((y0 + y1) / 2) << ")\">" << escape(spec.y_label) << "</text>\n";
}

}  // namespace

void write_line_plot(std::ostream& os, const PlotSpec& spec, const std::vector<Series>& series) {
  Frame f;
  for (const auto& s : series) {
    for (double v : s.xs) f.x.include(v);
    for (double v : s.ys) f.y.include(v);
  }
  f.x.finish();
  f.y.finish();
  open_svg(os, spec, f);

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kColors[i % kColors.size()];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    const std::size_t n = std::min(s.xs.size(), s.ys.size());
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(s.ys[j])) continue;
      os << num(f.px(s.xs[j])) << ',' << num(f.py(s.ys[j])) << (j + 1 < n ? " " : "");
    }
    os << "\"/>\n";
    if (s.markers) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(s.ys[j])) continue;
        os << "<circle cx=\"" << num(f.px(s.xs[j])) << "\" cy=\"" << num(f.py(s.ys[j]))
           << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      }
    }
    const double ly = kTop + 14.0 * static_cast<double>(i);
    os << "<text x=\"" << num(kWidth - kRight - 4) << "\" y=\"" << num(ly + 4)
       << "\" text-anchor=\"end\" fill=\"" << color << "\">" << escape(s.name) << "</text>\n";
  }
  os << "</svg>\n";
}

void write_bar_plot(std::ostream& os, const PlotSpec& spec, const std::vector<double>& xs,
                    const std::vector<double>& heights) {
  Frame f;
  for (double v : xs) {
    f.x.include(v - 0.5);
    f.x.include(v + 0.5);
  }
  f.y.include(0.0);
  for (double v : heights) f.y.include(v);
  f.x.finish();
  f.y.finish();
  open_svg(os, spec, f);

  const std::size_t n = std::min(xs.size(), heights.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double left = f.px(xs[i] - 0.4);
    const double right = f.px(xs[i] + 0.4);
    const double top = f.py(heights[i]);
    const double base = f.py(0.0);
    os << "<rect x=\"" << num(left) << "\" y=\"" << num(std::min(top, base)) << "\" width=\""
       << num(right - left) << "\" height=\"" << num(std::abs(base - top)) << "\" fill=\""
       << kColors[0] << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace wgrover::cli
