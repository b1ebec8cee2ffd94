// SPDX-License-Identifier: Apache-2.0
#include "pmbpqm/csv.hpp"

#include <cstdio>

namespace pmbpqm {

std::string CsvBuilder::format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void CsvBuilder::comment(const std::string& text) { comments_.push_back("# " + text); }

void CsvBuilder::header(const std::vector<std::string>& columns) {
  header_.clear();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) header_ += ',';
    header_ += columns[i];
  }
}

void CsvBuilder::row(const std::vector<double>& values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += format_number(values[i]);
  }
  rows_.push_back(std::move(line));
}

std::string CsvBuilder::str() const {
  std::string out;
  for (const std::string& c : comments_) {
    out += c;
    out += '\n';
  }
  return out + body();
}

std::string CsvBuilder::body() const {
  std::string out = header_;
  out += '\n';
  for (const std::string& r : rows_) {
    out += r;
    out += '\n';
  }
  return out;
}

}  // namespace pmbpqm
