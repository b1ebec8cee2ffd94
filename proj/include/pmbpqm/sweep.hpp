// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmbpqm/de.hpp"
#include "pmbpqm/decoder.hpp"

namespace pmbpqm {

// Parameters for one named experiment run. Sweeps walk a theta grid times a
// flip-probability list through the mixture channel family.
struct SweepSpec {
  std::string experiment = "fg5";  // fg5 | fg7 | lemma3q | de
  double theta_min = 0.1;
  double theta_max = 1.5707963267948966;
  int theta_steps = 25;
  std::vector<double> p_list = {0.0, 0.1, 0.2};
  int dv = 3;
  int dc = 6;
  int population = 5000;
  int iterations = 100;
  int bisect_steps = 20;
  double success_eps = 1e-3;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string profile = "full";  // full | ci
  std::string graph_json;        // optional custom graph for fg sweeps

  void validate() const;
  std::vector<double> theta_grid() const;
  std::string echo() const;  // one-line parameter echo for CSV headers
};

struct SweepOutput {
  std::string csv;         // main CSV (threshold curve for de)
  std::string extra_csv;   // Holevo-bound curve for de
  std::string svg;         // overlay plot for de
  std::string report;      // human-readable summary (lemma3q)
};

SweepOutput run_fg5(const SweepSpec& spec);
SweepOutput run_fg7(const SweepSpec& spec);
SweepOutput run_lemma3q();
SweepOutput run_de(const SweepSpec& spec);

}  // namespace pmbpqm
