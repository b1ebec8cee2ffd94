// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace pmbpqm {

// RFC-4180-style CSV with '#'-prefixed comment lines before the header.
// Numbers are rendered with 12 significant digits so reruns diff cleanly.
class CsvBuilder {
public:
  void comment(const std::string& text);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);

  // full document including comments
  std::string str() const;
  // header + data rows only; this part must be byte-identical across reruns
  std::string body() const;

  static std::string format_number(double v);

private:
  std::vector<std::string> comments_;
  std::string header_;
  std::vector<std::string> rows_;
};

}  // namespace pmbpqm
