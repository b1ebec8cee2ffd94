// SPDX-License-Identifier: Apache-2.0
#include "pmbpqm/de.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pmbpqm/combine.hpp"
#include "pmbpqm/parallel.hpp"
#include "pmbpqm/rng.hpp"

namespace pmbpqm {

void DEConfig::validate() const {
  if (dv < 2 || dc < 2) throw std::invalid_argument("DEConfig: degrees must be >= 2");
  if (dv >= dc) throw std::invalid_argument("DEConfig: dv < dc required for positive rate");
  if (population < 100) throw std::invalid_argument("DEConfig: population must be >= 100");
  if (iterations < 1) throw std::invalid_argument("DEConfig: iterations must be >= 1");
  if (success_eps <= 0.0 || success_eps >= 0.5) {
    throw std::invalid_argument("DEConfig: success_eps out of range");
  }
}

ChannelPopulation make_population(const QubitBSCQ& base, int size, std::uint64_t seed) {
  ChannelPopulation pop;
  pop.samples.assign(static_cast<std::size_t>(size), base);
  pop.rng_seed = seed;
  pop.iteration = 0;
  return pop;
}

namespace {

QubitBSCQ sample_branch(const BranchDistribution& bd, double u) {
  double acc = 0.0;
  for (const Branch& b : bd.branches) {
    acc += b.prob;
    if (u < acc) return b.channel;
  }
  return bd.branches.back().channel;
}

// levelwise pairwise reduction, sampling one outcome per paired measurement
QubitBSCQ reduce_sampled(std::vector<QubitBSCQ> inputs, bool bit_node, SplitMix64& rng) {
  while (inputs.size() > 1) {
    std::vector<QubitBSCQ> next;
    next.reserve(inputs.size() / 2 + 1);
    for (std::size_t i = 0; i + 1 < inputs.size(); i += 2) {
      BranchDistribution bd;
      if (bit_node) {
        bd = reduce_varoast(inputs[i], inputs[i + 1]);
      } else {
        // closed form; validated against pm_reduce by the test suite
        bd = dg_check_closed(theta_q_to_delta_gamma(inputs[i].theta, inputs[i].q),
                             theta_q_to_delta_gamma(inputs[i + 1].theta, inputs[i + 1].q));
      }
      next.push_back(sample_branch(bd, rng.next_double()));
    }
    if (inputs.size() % 2) next.push_back(inputs.back());
    inputs = std::move(next);
  }
  return inputs.front();
}

QubitBSCQ evolve_sample(const ChannelPopulation& pop, const DEConfig& cfg, int half_round,
                        std::size_t k) {
  SplitMix64 rng(mix_seed(pop.rng_seed, static_cast<std::uint64_t>(half_round),
                          static_cast<std::uint64_t>(k)));
  const std::size_t m = pop.samples.size();
  const bool check_round = (half_round % 2) == 1;
  std::vector<QubitBSCQ> inputs;
  if (check_round) {
    inputs.reserve(static_cast<std::size_t>(cfg.dc - 1));
    for (int d = 0; d < cfg.dc - 1; ++d) inputs.push_back(pop.samples[rng.next_below(m)]);
    return reduce_sampled(std::move(inputs), /*bit_node=*/false, rng);
  }
  inputs.reserve(static_cast<std::size_t>(cfg.dv));
  for (int d = 0; d < cfg.dv - 1; ++d) inputs.push_back(pop.samples[rng.next_below(m)]);
  inputs.push_back(cfg.base_channel);  // fresh observation enters last
  return reduce_sampled(std::move(inputs), /*bit_node=*/true, rng);
}

ChannelPopulation evolve(const ChannelPopulation& pop, const DEConfig& cfg, bool parallel) {
  cfg.validate();
  if (pop.samples.empty()) throw std::invalid_argument("de_iterate: empty population");
  ChannelPopulation next;
  next.rng_seed = pop.rng_seed;
  next.iteration = pop.iteration + 1;
  next.samples.resize(pop.samples.size());
  const int half_round = next.iteration;
  const long long m = static_cast<long long>(pop.samples.size());
  const int nt = resolve_threads(cfg.threads);
  ParallelErrors errors;
#pragma omp parallel for schedule(static) num_threads(nt) if (parallel)
  for (long long k = 0; k < m; ++k) {
    errors.run([&, k] {
      next.samples[static_cast<std::size_t>(k)] =
          evolve_sample(pop, cfg, half_round, static_cast<std::size_t>(k));
    });
  }
  errors.rethrow();
  return next;
}

}  // namespace

ChannelPopulation de_iterate(const ChannelPopulation& pop, const DEConfig& cfg) {
  return evolve(pop, cfg, /*parallel=*/true);
}

ChannelPopulation de_iterate_serial(const ChannelPopulation& pop, const DEConfig& cfg) {
  return evolve(pop, cfg, /*parallel=*/false);
}

double de_success(const ChannelPopulation& pop) {
  if (pop.samples.empty()) return 0.0;
  double s = 0.0;
  for (const QubitBSCQ& w : pop.samples) s += helstrom_qubit(w);
  return s / static_cast<double>(pop.samples.size());
}

bool de_run_converges(double theta, double q, const DEConfig& cfg, std::uint64_t seed) {
  ChannelPopulation pop = make_population(QubitBSCQ(theta, q), cfg.population, seed);
  DEConfig run = cfg;
  run.base_channel = QubitBSCQ(theta, q);
  for (int j = 0; j < cfg.iterations; ++j) {
    pop = de_iterate(pop, run);
    if (de_success(pop) == 1.0) return true;  // exactly absorbed
  }
  return de_success(pop) > 1.0 - cfg.success_eps;
}

double de_threshold(double theta, const DEConfig& cfg, int bisect_steps, std::uint64_t seed) {
  cfg.validate();
  if (!de_run_converges(theta, 0.0, cfg, mix_seed(seed, 0))) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int step = 1; step <= bisect_steps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (de_run_converges(theta, mid, cfg, mix_seed(seed, static_cast<std::uint64_t>(step)))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<CurvePoint> threshold_curve(const DEConfig& cfg, const std::vector<double>& thetas,
                                        std::uint64_t seed) {
  if (thetas.empty()) throw std::invalid_argument("threshold_curve: empty grid");
  std::vector<CurvePoint> out(thetas.size());
  const long long n = static_cast<long long>(thetas.size());
  const int nt = resolve_threads(cfg.threads);
  DEConfig inner = cfg;
  inner.threads = 1;  // grid points are the parallel axis
  ParallelErrors errors;
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long long i = 0; i < n; ++i) {
    errors.run([&, i] {
      const double theta = thetas[static_cast<std::size_t>(i)];
      const double q = de_threshold(theta, inner, cfg.bisect_steps,
                                    mix_seed(seed, static_cast<std::uint64_t>(i), 0x9d));
      out[static_cast<std::size_t>(i)] = {theta, q};
    });
  }
  errors.rethrow();
  return out;
}

double holevo_q_bound(double theta, double rate) {
  if (rate <= 0.0 || rate > 1.0) throw std::invalid_argument("holevo_q_bound: rate in (0, 1]");
  if (holevo(QubitBSCQ(theta, 0.0)) < rate) return -1.0;
  double lo = 0.0, hi = 1.0;  // holevo is monotone nonincreasing in q
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (holevo(QubitBSCQ(theta, mid)) >= rate) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<CurvePoint> holevo_curve(double rate, const std::vector<double>& thetas) {
  if (thetas.empty()) throw std::invalid_argument("holevo_curve: empty grid");
  std::vector<CurvePoint> out;
  out.reserve(thetas.size());
  for (double theta : thetas) out.push_back({theta, holevo_q_bound(theta, rate)});
  return out;
}

}  // namespace pmbpqm
