#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wgrover::cli {

struct Series {
  std::string name;
  std::vector<double> xs;
  std::vector<double> ys;
  bool markers = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
};

// Minimal axis-and-polyline rendering. Output is a pure function of the input
// so repeated runs are byte-identical.
void write_line_plot(std::ostream& os, const PlotSpec& spec, const std::vector<Series>& series);
void write_bar_plot(std::ostream& os, const PlotSpec& spec, const std::vector<double>& xs,
                    const std::vector<double>& heights);

}  // namespace wgrover::cli
