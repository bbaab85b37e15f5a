#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <optional>
#include <vector>

#include "tvg/errors.hpp"

namespace tvg {

using Point = Eigen::VectorXd;

/* Finite multiset of points in R^d.  Duplicates are allowed; every point
 * must share the same dimension and have finite coordinates. */
struct PointSet {
    int dim = 0;
    std::vector<Point> points;

    PointSet() = default;
    PointSet(int dim, std::vector<Point> pts);

    int size() const { return static_cast<int>(points.size()); }
    const Point& operator[](int i) const { return points[i]; }
};

/* Closed/open ball depending on the containment mode used to query it. */
struct Ball {
    Point center;
    double radius = 0.0;
};

/* Convex combination over an indexed family: distinct indices, nonnegative
 * weights summing to one (within 1e-12). */
struct ConvexCombination {
    std::vector<int> indices;
    Eigen::VectorXd weights;
};

enum class Containment { Open, Closed };

/* Convenience constructors used by callers and tests. */
Point make_point(std::initializer_list<double> coords);
PointSet make_point_set(const std::vector<std::vector<double>>& rows);

/* Reference magnitude for scale-relative tolerances: 1 + max input norm
 * (for balls, 1 + max(|center| + radius)). */
double scale_of(const std::vector<Point>& vs);
double scale_of(const PointSet& ps);
double scale_of(const std::vector<Ball>& balls);

/* Smallest pairwise distance (+inf for fewer than two points). */
double min_pairwise_distance(const PointSet& ps);

/* Ball with diameter ab: center (a+b)/2, radius |a-b|/2. */
Ball induced_ball(const Point& a, const Point& b);

/* Closed: |x-c| <= r + tol.  Open: |x-c| < r - tol. */
bool ball_contains(const Ball& ball, const Point& x, Containment mode, double tol);

/* Does the origin lie in conv{vs}?  On success returns a certificate with at
 * most d+1 nonzero weights (Caratheodory) whose recombination has norm <= tol.
 * Wolfe's minimum-norm-point algorithm: finite, deterministic, and the final
 * corral is affinely independent, which bounds the support size.
 * The overload without tol uses 1e-9 * (1 + max input norm). */
std::optional<ConvexCombination>
origin_in_convex_hull(const std::vector<Point>& vs, double tol);
std::optional<ConvexCombination> origin_in_convex_hull(const std::vector<Point>& vs);

} // namespace tvg
