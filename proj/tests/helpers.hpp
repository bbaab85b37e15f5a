#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tvg/geometry.hpp"
#include "tvg/graphs.hpp"

namespace tvgtest {

using tvg::Ball;
using tvg::Point;
using tvg::PointSet;

/* Deterministic streams for test-instance generation: engine output is
 * pinned by the standard, and the 53-bit transform avoids the
 * implementation-defined distributions. */
inline std::mt19937_64 rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

inline double uniform(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform(eng);
}

inline int uniform_int(std::mt19937_64& eng, int lo, int hi) {
    return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline PointSet random_point_set(std::mt19937_64& eng, int n, int dim, double lo = 0.0,
                                 double hi = 1.0) {
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Point p(dim);
        for (int c = 0; c < dim; ++c)
            p(c) = uniform(eng, lo, hi);
        pts.push_back(std::move(p));
    }
    return PointSet(dim, std::move(pts));
}

/* Redraws until the minimum pairwise separation clears 1e-3, so activity
 * and distinctness tolerances stay far from the noise floor. */
inline PointSet random_distinct_set(std::mt19937_64& eng, int n, int dim) {
    for (;;) {
        PointSet ps = random_point_set(eng, n, dim);
        if (tvg::min_pairwise_distance(ps) > 1e-3)
            return ps;
    }
}

/* Independent hull-membership oracle: try every support subset of size
 * <= d+1, solving [V; 1^T] w = [0; 1] by least squares and verifying the
 * candidate is a genuine convex combination with small recombination. */
inline bool oracle_origin_in_hull(const std::vector<Point>& vs, double tol) {
    const int m = static_cast<int>(vs.size());
    const Eigen::Index d = vs.front().size();
    const int kmax = std::min<int>(m, static_cast<int>(d) + 1);
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            idx[static_cast<size_t>(i)] = i;
        for (;;) {
            Eigen::MatrixXd a(d + 1, k);
            for (int i = 0; i < k; ++i) {
                a.col(i).head(d) = vs[static_cast<size_t>(idx[static_cast<size_t>(i)])];
                a(d, i) = 1.0;
            }
            Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d + 1);
            rhs(d) = 1.0;
            Eigen::VectorXd w = a.completeOrthogonalDecomposition().solve(rhs);
            bool ok = w.minCoeff() >= -1e-9 && std::abs(w.sum() - 1.0) <= 1e-9;
            if (ok) {
                Point rec = Point::Zero(d);
                for (int i = 0; i < k; ++i)
                    rec += w(i) * vs[static_cast<size_t>(idx[static_cast<size_t>(i)])];
                ok = rec.norm() <= tol;
            }
            if (ok)
                return true;
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - k + pos)
                --pos;
            if (pos < 0)
                break;
            ++idx[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < k; ++i)
                idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i) - 1] + 1;
        }
    }
    return false;
}

/* Exhaustive smallest-enclosing-ball oracle: the minimum-radius feasible
 * ball over all boundary-support subsets of size <= d+1. */
inline Ball oracle_seb(const PointSet& ps) {
    const int n = ps.size();
    const Eigen::Index d = ps.dim;
    const double scale = tvg::scale_of(ps);
    const int kmax = std::min<int>(n, static_cast<int>(d) + 1);
    Ball best{Point(), -1.0};
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            idx[static_cast<size_t>(i)] = i;
        for (;;) {
            const Point& q0 = ps[idx[0]];
            Eigen::MatrixXd m(k - 1, d);
            Eigen::VectorXd h(k - 1);
            for (int i = 1; i < k; ++i) {
                const Point diff = ps[idx[static_cast<size_t>(i)]] - q0;
                m.row(i - 1) = diff.transpose();
                h(i - 1) = 0.5 * diff.squaredNorm();
            }
            Point center = q0;
            if (k > 1)
                center += m.completeOrthogonalDecomposition().solve(h);
            double r = 0.0;
            for (int i = 0; i < k; ++i)
                r = std::max(r, (center - ps[idx[static_cast<size_t>(i)]]).norm());
            bool feasible = true;
            for (int i = 0; i < n && feasible; ++i)
                feasible = (center - ps[i]).norm() <= r + 1e-9 * scale;
            if (feasible && (best.radius < 0.0 || r < best.radius))
                best = Ball{center, r};
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos)
                --pos;
            if (pos < 0)
                break;
            ++idx[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < k; ++i)
                idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i) - 1] + 1;
        }
    }
    return best;
}

/* Multi-resolution grid oracle for the planar smallest intersecting ball:
 * square windows, 33x33 samples, recentered on the incumbent with a
 * six-spacing half-width.  Returns the best point and value seen. */
/* Independent reference for the min-intersecting-ball value in the plane.
 * Phase 1 enumerates exact equal-excess points for every support subset of
 * size 1, 2, or 3 (the minimiser of a max of at most m cones in 2-D is
 * determined by at most three of them).  Phase 2 runs a zoomed grid sweep
 * for blanket coverage.  Every candidate is scored by exact evaluation, so
 * inaccurate candidates can never lower the reported value incorrectly. */
inline std::pair<Point, double> oracle_mib_grid(const std::vector<Ball>& balls) {
    const auto value_at = [&](double x, double y) {
        double v = -std::numeric_limits<double>::infinity();
        for (const Ball& b : balls)
            v = std::max(v, std::hypot(x - b.center(0), y - b.center(1)) - b.radius);
        return v;
    };
    double bx = balls.front().center(0), by = balls.front().center(1);
    double bv = value_at(bx, by);
    const auto offer = [&](double x, double y) {
        if (!std::isfinite(x) || !std::isfinite(y))
            return;
        const double v = value_at(x, y);
        if (v < bv) {
            bv = v;
            bx = x;
            by = y;
        }
    };

    const int m = static_cast<int>(balls.size());
    for (const Ball& b : balls)
        offer(b.center(0), b.center(1));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Point d = balls[j].center - balls[i].center;
            const double dist = d.norm();
            if (dist < 1e-15)
                continue;
            // equal excess on the segment between the two centers
            const double t = 0.5 * (dist + balls[i].radius - balls[j].radius);
            if (t >= 0.0 && t <= dist)
                offer(balls[i].center(0) + d(0) * t / dist,
                      balls[i].center(1) + d(1) * t / dist);
        }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int l = j + 1; l < m; ++l) {
                // ||x - c_k|| = v + r_k for k in {i,j,l}: subtracting pairs
                // leaves a linear system x = x0 + x1 * v, then the first
                // circle equation gives a quadratic in v.
                const Ball& A = balls[i];
                const Ball& B = balls[j];
                const Ball& C = balls[l];
                Eigen::Matrix2d M;
                M.row(0) = 2.0 * (B.center - A.center).transpose();
                M.row(1) = 2.0 * (C.center - A.center).transpose();
                if (std::abs(M.determinant()) < 1e-12)
                    continue;
                Eigen::Vector2d p, q;
                p(0) = B.center.squaredNorm() - A.center.squaredNorm() -
                       (B.radius * B.radius - A.radius * A.radius);
                p(1) = C.center.squaredNorm() - A.center.squaredNorm() -
                       (C.radius * C.radius - A.radius * A.radius);
                q(0) = -2.0 * (B.radius - A.radius);
                q(1) = -2.0 * (C.radius - A.radius);
                const Eigen::Vector2d x0 = M.inverse() * p;
                const Eigen::Vector2d x1 = M.inverse() * q;
                const Eigen::Vector2d rel = x0 - Eigen::Vector2d(A.center);
                const double qa = x1.squaredNorm() - 1.0;
                const double qb = 2.0 * (x1.dot(rel) - A.radius);
                const double qc = rel.squaredNorm() - A.radius * A.radius;
                std::vector<double> roots;
                if (std::abs(qa) < 1e-14) {
                    if (std::abs(qb) > 1e-14)
                        roots.push_back(-qc / qb);
                } else {
                    const double disc = qb * qb - 4.0 * qa * qc;
                    if (disc >= 0.0) {
                        roots.push_back((-qb + std::sqrt(disc)) / (2.0 * qa));
                        roots.push_back((-qb - std::sqrt(disc)) / (2.0 * qa));
                    }
                }
                for (const double v : roots)
                    if (v + A.radius >= -1e-9 && v + B.radius >= -1e-9 &&
                        v + C.radius >= -1e-9)
                        offer(x0(0) + x1(0) * v, x0(1) + x1(1) * v);
            }

    double xmin = balls.front().center(0), xmax = xmin;
    double ymin = balls.front().center(1), ymax = ymin;
    double rmax = 0.0;
    for (const Ball& b : balls) {
        xmin = std::min(xmin, b.center(0));
        xmax = std::max(xmax, b.center(0));
        ymin = std::min(ymin, b.center(1));
        ymax = std::max(ymax, b.center(1));
        rmax = std::max(rmax, b.radius);
    }
    double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    double hw = 0.5 * std::max(xmax - xmin, ymax - ymin) + rmax + 1.0;
    for (int level = 0; level < 24; ++level) {
        double lx = cx, ly = cy, lv = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 32; ++i) {
            for (int j = 0; j <= 32; ++j) {
                const double x = cx - hw + 2.0 * hw * i / 32.0;
                const double y = cy - hw + 2.0 * hw * j / 32.0;
                const double v = value_at(x, y);
                if (v < lv) {
                    lv = v;
                    lx = x;
                    ly = y;
                }
            }
        }
        offer(lx, ly);
        cx = lx;
        cy = ly;
        hw = 6.0 * (2.0 * hw / 32.0);
    }
    return {tvg::make_point({bx, by}), bv};
}

} // namespace tvgtest
