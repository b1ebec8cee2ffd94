// SPDX-License-Identifier: Apache-2.0
#include "pmbpqm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pmbpqm {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

SvgPlot::SvgPlot(std::string x_label, std::string y_label)
    : x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgPlot::add_series(const std::string& name, const std::string& color,
                         const std::vector<double>& x, const std::vector<double>& y) {
  series_.push_back({name, color, x, y});
}

std::string SvgPlot::render() const {
  const double width = 640, height = 440;
  const double ml = 70, mr = 20, mt = 20, mb = 55;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const Series& s : series_) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (first) {
        xmin = xmax = s.x[i];
        ymin = ymax = s.y[i];
        first = false;
      }
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (xmax - xmin < 1e-12) xmax = xmin + 1;
  if (ymax - ymin < 1e-12) ymax = ymin + 1;
  ymin = std::min(ymin, 0.0);
  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
  auto py = [&](double y) { return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\">\n";
  out += "<rect x=\"" + num(ml) + "\" y=\"" + num(mt) + "\" width=\"" + num(width - ml - mr) +
         "\" height=\"" + num(height - mt - mb) +
         "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
  // ticks
  for (int i = 0; i <= 5; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 5.0;
    const double fy = ymin + (ymax - ymin) * i / 5.0;
    out += "<line x1=\"" + num(px(fx)) + "\" y1=\"" + num(height - mb) + "\" x2=\"" + num(px(fx)) +
           "\" y2=\"" + num(height - mb + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(height - mb + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + num(fx) + "</text>\n";
    out += "<line x1=\"" + num(ml - 5) + "\" y1=\"" + num(py(fy)) + "\" x2=\"" + num(ml) +
           "\" y2=\"" + num(py(fy)) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(ml - 8) + "\" y=\"" + num(py(fy) + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + num(fy) + "</text>\n";
  }
  out += "<text x=\"" + num(ml + (width - ml - mr) / 2) + "\" y=\"" + num(height - 12) +
         "\" font-size=\"13\" text-anchor=\"middle\">" + x_label_ + "</text>\n";
  out += "<text x=\"16\" y=\"" + num(mt + (height - mt - mb) / 2) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(mt + (height - mt - mb) / 2) + ")\">" + y_label_ + "</text>\n";
  // series
  double legend_y = mt + 16;
  for (const Series& s : series_) {
    std::string pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      pts += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
    }
    out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + s.color +
           "\" stroke-width=\"2\"/>\n";
    out += "<line x1=\"" + num(ml + 10) + "\" y1=\"" + num(legend_y) + "\" x2=\"" + num(ml + 34) +
           "\" y2=\"" + num(legend_y) + "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + num(ml + 40) + "\" y=\"" + num(legend_y + 4) + "\" font-size=\"12\">" +
           s.name + "</text>\n";
    legend_y += 18;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pmbpqm
