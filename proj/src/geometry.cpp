#include "tvg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tvg {

PointSet::PointSet(int dim_, std::vector<Point> pts) : dim(dim_), points(std::move(pts)) {
    if (dim <= 0)
        throw InvalidInput("point set dimension must be positive");
    for (const Point& p : points) {
        if (p.size() != dim)
            throw DimensionMismatch("point dimension differs from the set dimension");
        if (!p.allFinite())
            throw InvalidInput("point set contains a non-finite coordinate");
    }
}

Point make_point(std::initializer_list<double> coords) {
    Point p(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (double c : coords)
        p(i++) = c;
    return p;
}

PointSet make_point_set(const std::vector<std::vector<double>>& rows) {
    if (rows.empty())
        throw InvalidInput("cannot build a point set from zero rows");
    const int dim = static_cast<int>(rows.front().size());
    std::vector<Point> pts;
    pts.reserve(rows.size());
    for (const auto& row : rows) {
        Point p(static_cast<Eigen::Index>(row.size()));
        for (Eigen::Index i = 0; i < p.size(); ++i)
            p(i) = row[static_cast<size_t>(i)];
        pts.push_back(std::move(p));
    }
    return PointSet(dim, std::move(pts));
}

double scale_of(const std::vector<Point>& vs) {
    double m = 0.0;
    for (const Point& v : vs)
        m = std::max(m, v.norm());
    return 1.0 + m;
}

double scale_of(const PointSet& ps) {
    return scale_of(ps.points);
}

double scale_of(const std::vector<Ball>& balls) {
    double m = 0.0;
    for (const Ball& b : balls)
        m = std::max(m, b.center.norm() + b.radius);
    return 1.0 + m;
}

double min_pairwise_distance(const PointSet& ps) {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < ps.size(); ++i)
        for (int j = i + 1; j < ps.size(); ++j)
            m = std::min(m, (ps[i] - ps[j]).norm());
    return m;
}

Ball induced_ball(const Point& a, const Point& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("induced_ball: endpoint dimensions differ");
    return Ball{0.5 * (a + b), 0.5 * (a - b).norm()};
}

bool ball_contains(const Ball& ball, const Point& x, Containment mode, double tol) {
    if (x.size() != ball.center.size())
        throw DimensionMismatch("ball_contains: point and center dimensions differ");
    const double d = (x - ball.center).norm();
    return mode == Containment::Closed ? d <= ball.radius + tol : d < ball.radius - tol;
}

namespace {

/* Minimum-norm point in the affine hull of the corral: minimize |V w| with
 * sum w = 1 and w free in sign.  KKT system
 *   [ G  1 ] [w ]   [0]
 *   [ 1' 0 ] [nu] = [1],   G(i,j) = <v_i, v_j>.
 * Returns an empty vector when the system is singular (affinely dependent
 * corral, which Wolfe's algorithm does not produce except through roundoff). */
Eigen::VectorXd affine_min_norm(const std::vector<Point>& vs, const std::vector<int>& corral) {
    const int k = static_cast<int>(corral.size());
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            kkt(i, j) = vs[corral[i]].dot(vs[corral[j]]);
    kkt.row(k).head(k).setOnes();
    kkt.col(k).head(k).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    rhs(k) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    if (!lu.isInvertible())
        return Eigen::VectorXd();
    Eigen::VectorXd sol = lu.solve(rhs);
    return sol.head(k);
}

} // namespace

std::optional<ConvexCombination> origin_in_convex_hull(const std::vector<Point>& vs,
                                                       double tol) {
    if (vs.empty())
        throw InvalidInput("origin_in_convex_hull: empty input");
    const Eigen::Index dim = vs.front().size();
    for (const Point& v : vs) {
        if (v.size() != dim)
            throw DimensionMismatch("origin_in_convex_hull: mixed dimensions");
        if (!v.allFinite())
            throw InvalidInput("origin_in_convex_hull: non-finite input");
    }

    const double scale = scale_of(vs);
    const double inner_eps = 1e-12 * scale * scale;  // dot-product comparisons
    const double drop_eps = 1e-14;                   // weight considered zero

    // Wolfe's minimum-norm-point algorithm over conv{vs}.
    int start = 0;
    for (int j = 1; j < static_cast<int>(vs.size()); ++j)
        if (vs[j].squaredNorm() < vs[start].squaredNorm())
            start = j;
    std::vector<int> corral{start};
    std::vector<double> weights{1.0};
    Point x = vs[start];

    const int max_major = 16 * static_cast<int>(vs.size()) + 64;
    for (int major = 0; major < max_major; ++major) {
        // Most improving vertex; stop when none improves on |x|^2.
        int best = 0;
        double best_dot = vs[0].dot(x);
        for (int j = 1; j < static_cast<int>(vs.size()); ++j) {
            const double d = vs[j].dot(x);
            if (d < best_dot) {
                best = j;
                best_dot = d;
            }
        }
        if (x.squaredNorm() <= best_dot + inner_eps)
            break;
        if (std::find(corral.begin(), corral.end(), best) != corral.end())
            break;  // numerical stall; x is as good as it gets
        corral.push_back(best);
        weights.push_back(0.0);

        // Minor cycle: pull x to the min-norm point of the corral's convex
        // hull, dropping corral points whose weight hits zero.
        for (;;) {
            Eigen::VectorXd alpha = affine_min_norm(vs, corral);
            if (alpha.size() == 0) {
                // Affinely dependent corral through roundoff: drop the newest.
                corral.pop_back();
                weights.pop_back();
                break;
            }
            if (alpha.minCoeff() > drop_eps) {
                for (int i = 0; i < alpha.size(); ++i)
                    weights[static_cast<size_t>(i)] = alpha(i);
                break;
            }
            double theta = 1.0;
            for (int i = 0; i < alpha.size(); ++i) {
                if (alpha(i) <= drop_eps) {
                    const double wi = weights[static_cast<size_t>(i)];
                    const double denom = wi - alpha(i);
                    if (denom > 0.0)
                        theta = std::min(theta, wi / denom);
                }
            }
            std::vector<int> kept_idx;
            std::vector<double> kept_w;
            for (int i = 0; i < alpha.size(); ++i) {
                const double w = theta * alpha(i) + (1.0 - theta) * weights[static_cast<size_t>(i)];
                if (w > drop_eps) {
                    kept_idx.push_back(corral[static_cast<size_t>(i)]);
                    kept_w.push_back(w);
                }
            }
            if (kept_idx.empty()) {
                kept_idx.push_back(corral.front());
                kept_w.push_back(1.0);
            }
            corral = std::move(kept_idx);
            weights = std::move(kept_w);
        }

        x.setZero(dim);
        for (size_t i = 0; i < corral.size(); ++i)
            x += weights[i] * vs[corral[static_cast<size_t>(i)]];
    }

    x.setZero(dim);
    for (size_t i = 0; i < corral.size(); ++i)
        x += weights[i] * vs[corral[i]];
    if (x.norm() > tol)
        return std::nullopt;

    // Clip, renormalize, and present sorted by index.
    std::vector<size_t> order(corral.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return corral[a] < corral[b]; });
    ConvexCombination combo;
    combo.weights.resize(static_cast<Eigen::Index>(order.size()));
    double total = 0.0;
    for (size_t i = 0; i < order.size(); ++i) {
        combo.indices.push_back(corral[order[i]]);
        const double w = std::max(0.0, weights[order[i]]);
        combo.weights(static_cast<Eigen::Index>(i)) = w;
        total += w;
    }
    combo.weights /= total;
    return combo;
}

std::optional<ConvexCombination> origin_in_convex_hull(const std::vector<Point>& vs) {
    return origin_in_convex_hull(vs, 1e-9 * scale_of(vs));
}

} // namespace tvg
