// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "pmbpqm/channel.hpp"

namespace pmbpqm {

// Knobs of one density-evolution run for a (dv, dc)-regular ensemble.
// iterations counts half-rounds: odd indices run the check update, even ones
// the bit update. The check update combines dc-1 population draws; the bit
// update combines dv-1 draws plus a fresh base-channel observation.
struct DEConfig {
  int dv = 3;
  int dc = 6;
  int population = 5000;
  int iterations = 100;
  double success_eps = 1e-3;
  int bisect_steps = 20;
  QubitBSCQ base_channel;
  int threads = 0;  // 0 = all hardware threads

  void validate() const;
};

struct ChannelPopulation {
  std::vector<QubitBSCQ> samples;
  std::uint64_t rng_seed = 0;
  int iteration = 0;  // half-rounds completed so far
};

ChannelPopulation make_population(const QubitBSCQ& base, int size, std::uint64_t seed);

// One half-round of population dynamics. Sample k of half-round j draws from
// a generator seeded by (rng_seed, j, k), so the result is bit-identical for
// any thread count. de_iterate_serial is the reference implementation used by
// the tests and the benchmark.
ChannelPopulation de_iterate(const ChannelPopulation& pop, const DEConfig& cfg);
ChannelPopulation de_iterate_serial(const ChannelPopulation& pop, const DEConfig& cfg);

// Mean Helstrom success over the population.
double de_success(const ChannelPopulation& pop);

// Runs cfg.iterations half-rounds from a fresh population of base channels
// (theta, q) and reports whether the final success clears 1 - success_eps.
bool de_run_converges(double theta, double q, const DEConfig& cfg, std::uint64_t seed);

// Bisection for the largest depolarizing weight q that still converges.
// Returns 0 when even q = 0 fails to converge.
double de_threshold(double theta, const DEConfig& cfg, int bisect_steps, std::uint64_t seed);

struct CurvePoint {
  double theta = 0.0;
  double q = 0.0;  // threshold or Holevo bound; -1 marks "rate unattainable"
};

std::vector<CurvePoint> threshold_curve(const DEConfig& cfg, const std::vector<double>& thetas,
                                        std::uint64_t seed);

// Largest q with holevo(theta, q) >= rate, by bisection; -1 when even q = 0
// falls short of the rate.
double holevo_q_bound(double theta, double rate);
std::vector<CurvePoint> holevo_curve(double rate, const std::vector<double>& thetas);

}  // namespace pmbpqm
