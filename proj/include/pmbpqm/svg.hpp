// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace pmbpqm {

// Minimal SVG 1.1 line plot: axes box, tick labels, polylines, text legend.
class SvgPlot {
public:
  SvgPlot(std::string x_label, std::string y_label);

  void add_series(const std::string& name, const std::string& color,
                  const std::vector<double>& x, const std::vector<double>& y);
  std::string render() const;

private:
  struct Series {
    std::string name;
    std::string color;
    std::vector<double> x, y;
  };
  std::string x_label_, y_label_;
  std::vector<Series> series_;
};

}  // namespace pmbpqm
