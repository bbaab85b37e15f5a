#pragma once

#include <cstdint>

#include "tvg/graphs.hpp"

namespace tvg {

/* Random-search configuration for small depth/min-distance ratios.
 * Trials draw n points uniformly from the unit cube; each trial then runs
 * `descent_steps` sweeps of greedy coordinate descent with geometric step
 * decay, rejecting moves that would create duplicate points.  Each trial's
 * RNG stream is derived from (seed, trial index), so results are
 * independent of evaluation order and bit-reproducible. */
struct HuntConfig {
    int dim = 2;
    int n = 4;  // even
    int trials = 10;
    std::uint64_t seed = 0;
    int descent_steps = 0;
    double step_size = 0.05;
};

/* zero_depth_trials lists trials whose final matching has (numerically)
 * zero depth; in d >= 3 these are conjecture-relevant findings rather than
 * failures.  descent_trace holds the accepted ratios along the argmin
 * trial's descent, starting with its initial ratio. */
struct HuntReport {
    HuntConfig config;
    double min_ratio = 0.0;
    int argmin_trial = 0;
    PointSet argmin;
    std::vector<double> ratios;  // final ratio per trial
    std::vector<double> descent_trace;
    std::vector<int> zero_depth_trials;
};

/* depth_of_matching(max_sum_matching(ps)) / min pairwise distance.
 * Throws DuplicatePoints when the minimum pairwise distance vanishes. */
double depth_ratio(const PointSet& ps);

HuntReport hunt(const HuntConfig& cfg);

} // namespace tvg
