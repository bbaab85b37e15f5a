#include "tvg/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace tvg {

double active_tolerance(double scale) {
    return 1e-7 * scale;
}

namespace {

/* Center of the smallest ball with `support` on its boundary: q0 + w where
 * w is the minimum-norm solution of (q_i - q0) . w = |q_i - q0|^2 / 2. */
Ball ball_from_support(const std::vector<Point>& support, Eigen::Index dim) {
    if (support.empty())
        return Ball{Point::Zero(dim), -1.0};
    if (support.size() == 1)
        return Ball{support.front(), 0.0};
    const Point& q0 = support.front();
    const Eigen::Index k = static_cast<Eigen::Index>(support.size()) - 1;
    Eigen::MatrixXd m(k, dim);
    Eigen::VectorXd h(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const Point diff = support[static_cast<size_t>(i) + 1] - q0;
        m.row(i) = diff.transpose();
        h(i) = 0.5 * diff.squaredNorm();
    }
    const Point center = q0 + m.completeOrthogonalDecomposition().solve(h);
    double r = 0.0;
    for (const Point& q : support)
        r = std::max(r, (center - q).norm());
    return Ball{center, r};
}

Ball welzl(const std::vector<Point>& pts, int end, std::vector<Point>& support,
           Eigen::Index dim, double tol) {
    if (end == 0 || static_cast<Eigen::Index>(support.size()) == dim + 1)
        return ball_from_support(support, dim);
    Ball b = welzl(pts, end - 1, support, dim, tol);
    const Point& p = pts[static_cast<size_t>(end) - 1];
    if (b.radius >= 0.0 && (p - b.center).norm() <= b.radius + tol)
        return b;
    support.push_back(p);
    b = welzl(pts, end - 1, support, dim, tol);
    support.pop_back();
    return b;
}

Point gradient_or_marker(const Point& minimizer, const Point& center, double scale) {
    Point g = minimizer - center;
    const double n = g.norm();
    if (n <= 1e-12 * scale)
        return Point::Zero(minimizer.size());
    return g / n;
}

} // namespace

MinimaxResult smallest_enclosing_ball(const PointSet& ps) {
    if (ps.size() == 0)
        throw InvalidInput("smallest_enclosing_ball: empty point set");
    const double scale = scale_of(ps);

    // Deterministic shuffle (Fisher-Yates on a fixed-seed engine).
    std::vector<Point> pts(ps.points);
    std::mt19937_64 eng(0x5EB0001ULL);
    for (size_t i = pts.size() - 1; i > 0; --i)
        std::swap(pts[i], pts[eng() % (i + 1)]);

    std::vector<Point> support;
    Ball ball = welzl(pts, static_cast<int>(pts.size()), support, ps.dim, 1e-12 * scale);

    MinimaxResult res;
    res.minimizer = ball.center;
    res.value = 0.0;
    for (const Point& p : ps.points)
        res.value = std::max(res.value, (ball.center - p).norm());
    res.active = active_set(res, ps, active_tolerance(scale));
    for (int i : res.active)
        res.gradients.push_back(gradient_or_marker(res.minimizer, ps[i], scale));
    return res;
}

namespace {

double max_excess(const std::vector<Ball>& balls, const Point& x) {
    double v = -std::numeric_limits<double>::infinity();
    for (const Ball& b : balls)
        v = std::max(v, (x - b.center).norm() - b.radius);
    return v;
}

/* Candidate (x, t) pairs for one support subset: points where every subset
 * ball is touched with equal excess t.  See min_intersecting_ball. */
struct Candidate {
    Point x;
    double t;
};

void solve_subset(const std::vector<Ball>& balls, const std::vector<int>& subset,
                  std::vector<Candidate>& out) {
    out.clear();
    const Ball& b1 = balls[static_cast<size_t>(subset.front())];
    const Eigen::Index d = b1.center.size();
    const int k = static_cast<int>(subset.size());

    if (k == 1) {
        out.push_back(Candidate{b1.center, -b1.radius});
        return;
    }

    // Differences of the squared touching equalities, in the frame with
    // b1's center at the origin: rows [-2 c_i^T, -2 (r_i - r_1)] y = beta_i
    // for the unknown y = (x, t).
    Eigen::MatrixXd rows(k - 1, d + 1);
    Eigen::VectorXd beta(k - 1);
    for (int i = 1; i < k; ++i) {
        const Ball& bi = balls[static_cast<size_t>(subset[static_cast<size_t>(i)])];
        const Point ci = bi.center - b1.center;
        rows.row(i - 1).head(d) = -2.0 * ci.transpose();
        rows(i - 1, d) = -2.0 * (bi.radius - b1.radius);
        beta(i - 1) = bi.radius * bi.radius - b1.radius * b1.radius - ci.squaredNorm();
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(rows);
    lu.setThreshold(1e-9);
    if (lu.rank() < k - 1)
        return;  // degenerate subset; smaller subsets cover its solutions
    const Eigen::VectorXd y0 = lu.solve(beta);
    const Eigen::MatrixXd kernel = lu.kernel();  // (d+1) x kdim, kdim = d+2-k

    const Eigen::MatrixXd x_part = kernel.topRows(d);
    const Eigen::VectorXd g = kernel.row(d).transpose();
    const Eigen::VectorXd x0 = y0.head(d);
    const double t0 = y0(d);

    // Remaining first-ball equality |x0 + X z| = t + r_1 as a quadric
    // z^T Q z + 2 b^T z + s = 0; extremal t along it at z = alpha u - v.
    const Eigen::MatrixXd q = x_part.transpose() * x_part - g * g.transpose();
    const Eigen::VectorXd b = x_part.transpose() * x0 - (t0 + b1.radius) * g;
    const double s = x0.squaredNorm() - (t0 + b1.radius) * (t0 + b1.radius);

    Eigen::FullPivLU<Eigen::MatrixXd> luq(q);
    if (!luq.isInvertible())
        return;
    const Eigen::VectorXd u = luq.solve(g);
    const Eigen::VectorXd v = luq.solve(b);
    const double gamma = g.dot(u);
    const double rho = b.dot(v);

    std::vector<Eigen::VectorXd> zs;
    if (std::abs(gamma) <= 1e-13) {
        // t is fixed by the linear rows; the quadric's stationary point is
        // the only candidate worth testing (verification rejects the rest).
        zs.push_back(-v);
    } else {
        double alpha2 = (rho - s) / gamma;
        if (alpha2 < 0.0 && alpha2 > -1e-8)
            alpha2 = 0.0;
        if (alpha2 < 0.0)
            return;
        const double alpha = std::sqrt(alpha2);
        zs.push_back(alpha * u - v);
        if (alpha > 0.0)
            zs.push_back(-alpha * u - v);
    }
    for (const Eigen::VectorXd& z : zs) {
        Candidate c;
        c.x = b1.center + x0 + x_part * z;
        c.t = t0 + g.dot(z);
        out.push_back(std::move(c));
    }
}

} // namespace

MinimaxResult min_intersecting_ball(const std::vector<Ball>& balls) {
    if (balls.empty())
        throw InvalidInput("min_intersecting_ball: empty ball family");
    const Eigen::Index d = balls.front().center.size();
    for (const Ball& b : balls) {
        if (b.center.size() != d)
            throw DimensionMismatch("min_intersecting_ball: mixed dimensions");
        if (!b.center.allFinite() || !std::isfinite(b.radius) || b.radius < 0.0)
            throw InvalidInput("min_intersecting_ball: invalid ball");
    }
    const double scale = scale_of(balls);
    const double tau_eq = 1e-10 * scale;
    const double tau_feas = 1e-10 * scale;
    const int m = static_cast<int>(balls.size());
    const int max_k = std::min<int>(m, static_cast<int>(d) + 1);

    bool found = false;
    Candidate best{Point(), std::numeric_limits<double>::infinity()};
    std::vector<Candidate> cands;

    // All support subsets of size 1..d+1, lexicographic within each size.
    for (int k = 1; k <= max_k; ++k) {
        std::vector<int> subset(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            subset[static_cast<size_t>(i)] = i;
        for (;;) {
            solve_subset(balls, subset, cands);
            for (const Candidate& c : cands) {
                bool ok = true;
                for (int i : subset) {
                    const Ball& bi = balls[static_cast<size_t>(i)];
                    if (std::abs((c.x - bi.center).norm() - (c.t + bi.radius)) > tau_eq) {
                        ok = false;
                        break;
                    }
                }
                if (ok && max_excess(balls, c.x) > c.t + tau_feas)
                    ok = false;
                if (ok && c.t < best.t) {
                    best = c;
                    found = true;
                }
            }
            // Next lexicographic k-combination of {0..m-1}.
            int pos = k - 1;
            while (pos >= 0 && subset[static_cast<size_t>(pos)] == m - k + pos)
                --pos;
            if (pos < 0)
                break;
            ++subset[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < k; ++i)
                subset[static_cast<size_t>(i)] = subset[static_cast<size_t>(i) - 1] + 1;
        }
    }
    if (!found)
        throw CertificateFailure("min_intersecting_ball: no support subset verified");

    MinimaxResult res;
    res.minimizer = best.x;
    res.value = max_excess(balls, best.x);
    res.active = active_set(res, balls, active_tolerance(scale));
    for (int i : res.active)
        res.gradients.push_back(
            gradient_or_marker(res.minimizer, balls[static_cast<size_t>(i)].center, scale));
    return res;
}

std::vector<int> active_set(const MinimaxResult& res, const PointSet& ps, double tol_act) {
    std::vector<int> out;
    for (int i = 0; i < ps.size(); ++i)
        if (res.value - (res.minimizer - ps[i]).norm() <= tol_act)
            out.push_back(i);
    return out;
}

std::vector<int> active_set(const MinimaxResult& res, const std::vector<Ball>& balls,
                            double tol_act) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(balls.size()); ++i) {
        const Ball& b = balls[static_cast<size_t>(i)];
        if (res.value - ((res.minimizer - b.center).norm() - b.radius) <= tol_act)
            out.push_back(i);
    }
    return out;
}

ConvexCombination optimality_certificate(const MinimaxResult& res) {
    if (res.active.empty())
        throw CertificateFailure("optimality_certificate: empty active set");
    if (res.active.size() == 1) {
        ConvexCombination combo;
        combo.indices = {res.active.front()};
        combo.weights = Eigen::VectorXd::Ones(1);
        return combo;
    }
    for (const Point& g : res.gradients)
        if (g.isZero(0.0))
            throw NondifferentiableActive(
                "optimality_certificate: minimizer coincides with an active center");
    auto combo = origin_in_convex_hull(res.gradients, 1e-8 * scale_of(res.gradients));
    if (!combo)
        throw CertificateFailure(
            "optimality_certificate: active gradients do not recombine to zero");
    for (int& idx : combo->indices)
        idx = res.active[static_cast<size_t>(idx)];
    return *combo;
}

} // namespace tvg
