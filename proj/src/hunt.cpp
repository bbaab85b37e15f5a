#include "tvg/hunt.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "tvg/tverberg.hpp"

namespace tvg {

double depth_ratio(const PointSet& ps) {
    const double dmin = min_pairwise_distance(ps);
    if (dmin == 0.0)
        throw DuplicatePoints("depth_ratio: duplicate points");
    return depth_of_matching(ps, max_sum_matching(ps)) / dmin;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::mt19937_64 trial_engine(std::uint64_t seed, int trial) {
    return std::mt19937_64(
        splitmix64(seed ^ (static_cast<std::uint64_t>(trial) * 0x9E3779B97F4A7C15ULL)));
}

PointSet draw_points(std::mt19937_64& eng, int dim, int n) {
    for (;;) {
        std::vector<Point> pts;
        pts.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            Point p(dim);
            for (int c = 0; c < dim; ++c)
                p(c) = uniform01(eng);
            pts.push_back(std::move(p));
        }
        PointSet ps(dim, std::move(pts));
        if (min_pairwise_distance(ps) > 0.0)
            return ps;
    }
}

/* One trial: draw, then `steps` sweeps of greedy first-improvement
 * coordinate descent with geometric step decay.  Appends each accepted
 * ratio (after the initial one) to `trace` when it is non-null. */
std::pair<PointSet, double> run_trial(const HuntConfig& cfg, int trial,
                                      std::vector<double>* trace) {
    std::mt19937_64 eng = trial_engine(cfg.seed, trial);
    PointSet ps = draw_points(eng, cfg.dim, cfg.n);
    double ratio = depth_ratio(ps);
    if (trace)
        trace->push_back(ratio);
    for (int sweep = 0; sweep < cfg.descent_steps; ++sweep) {
        const double step = cfg.step_size * std::pow(0.7, sweep);
        for (int i = 0; i < cfg.n; ++i) {
            for (int c = 0; c < cfg.dim; ++c) {
                for (double dir : {1.0, -1.0}) {
                    std::vector<Point> pts = ps.points;
                    pts[static_cast<size_t>(i)](c) += dir * step;
                    PointSet cand(cfg.dim, std::move(pts));
                    if (min_pairwise_distance(cand) == 0.0)
                        continue;
                    const double r = depth_ratio(cand);
                    if (r < ratio) {
                        ps = std::move(cand);
                        ratio = r;
                        if (trace)
                            trace->push_back(r);
                        break;  // next coordinate
                    }
                }
            }
        }
    }
    return {std::move(ps), ratio};
}

} // namespace

HuntReport hunt(const HuntConfig& cfg) {
    if (cfg.dim < 1 || cfg.n < 2 || cfg.n % 2 != 0 || cfg.trials < 1)
        throw InvalidInput("hunt: need dim >= 1, even n >= 2, trials >= 1");
    if (cfg.n > 22)
        throw InvalidInput("hunt: exact matching limits n to 22");

    HuntReport rep;
    rep.config = cfg;
    rep.ratios.reserve(static_cast<size_t>(cfg.trials));
    int argmin = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < cfg.trials; ++t) {
        auto [ps, ratio] = run_trial(cfg, t, nullptr);
        rep.ratios.push_back(ratio);
        const double depth = depth_of_matching(ps, max_sum_matching(ps));
        if (depth <= classification_tolerance(scale_of(ps)))
            rep.zero_depth_trials.push_back(t);
        if (ratio < best) {
            best = ratio;
            argmin = t;
        }
    }
    // Re-run the winning trial; per-trial streams make this bit-identical.
    auto [ps, ratio] = run_trial(cfg, argmin, &rep.descent_trace);
    rep.min_ratio = ratio;
    rep.argmin_trial = argmin;
    rep.argmin = std::move(ps);
    return rep;
}

} // namespace tvg
