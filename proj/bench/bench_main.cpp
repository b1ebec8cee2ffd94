// SPDX-License-Identifier: Apache-2.0
//
// Compares the serial reference kernels against the OpenMP ones and checks
// that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "pmbpqm/de.hpp"
#include "pmbpqm/parallel.hpp"
#include "pmbpqm/sweep.hpp"

using namespace pmbpqm;

namespace {

double time_of(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", resolve_threads(0));

  {
    DEConfig cfg;
    cfg.dv = 3;
    cfg.dc = 6;
    cfg.population = 5000;
    cfg.iterations = 10;
    cfg.base_channel = QubitBSCQ(1.3, 0.12);
    const ChannelPopulation start = make_population(cfg.base_channel, cfg.population, 1);

    ChannelPopulation serial_out = start, parallel_out = start;
    const double t_serial = time_of([&] {
      for (int j = 0; j < cfg.iterations; ++j) serial_out = de_iterate_serial(serial_out, cfg);
    });
    const double t_parallel = time_of([&] {
      for (int j = 0; j < cfg.iterations; ++j) parallel_out = de_iterate(parallel_out, cfg);
    });
    bool same = serial_out.samples.size() == parallel_out.samples.size();
    for (std::size_t k = 0; same && k < serial_out.samples.size(); ++k) {
      same = serial_out.samples[k].theta == parallel_out.samples[k].theta &&
             serial_out.samples[k].q == parallel_out.samples[k].q;
    }
    std::printf("density evolution, M=%d, %d half-rounds\n", cfg.population, cfg.iterations);
    std::printf("  serial reference : %8.3f s\n", t_serial);
    std::printf("  OpenMP kernel    : %8.3f s   speedup %.2fx   identical: %s\n\n", t_parallel,
                t_serial / t_parallel, same ? "yes" : "NO");
  }

  {
    SweepSpec spec;
    spec.experiment = "fg7";
    spec.theta_steps = 8;
    spec.p_list = {0.0, 0.1, 0.2};
    spec.threads = 1;
    std::string serial_csv, parallel_csv;
    const double t_serial = time_of([&] { serial_csv = run_fg7(spec).csv; });
    spec.threads = 0;  // all threads
    const double t_parallel = time_of([&] { parallel_csv = run_fg7(spec).csv; });
    // compare bodies (headers echo the thread count)
    auto body = [](const std::string& s) {
      const auto last_comment = s.rfind('#');
      const auto cut = s.find('\n', last_comment);
      return s.substr(cut + 1);
    };
    std::printf("fg7 sweep, %d grid cells\n", spec.theta_steps * 3);
    std::printf("  single thread    : %8.3f s\n", t_serial);
    std::printf("  parallel map     : %8.3f s   speedup %.2fx   identical: %s\n", t_parallel,
                t_serial / t_parallel, body(serial_csv) == body(parallel_csv) ? "yes" : "NO");
  }
  return 0;
}
