#pragma once

#include "tvg/geometry.hpp"

namespace tvg {

/* Result of minimizing a finite max of distance-type functions
 * F(x) = max_i f_i(x).
 *
 *   minimizer  the argmin x*
 *   value      F(x*), recomputed directly at x* (so it is consistent with
 *              the constituents by construction)
 *   active     indices with value - f_i(x*) <= tol_act, ascending
 *   gradients  one entry per active index: the unit gradient of f_i at x*,
 *              or a zero vector where f_i is not differentiable there
 *   certificate optional convex recombination of active gradients (filled
 *              by optimality_certificate)
 */
struct MinimaxResult {
    Point minimizer;
    double value = 0.0;
    std::vector<int> active;
    std::vector<Point> gradients;
    std::optional<ConvexCombination> certificate;
};

/* Activity tolerance used when classifying constituents: 1e-7 * scale. */
double active_tolerance(double scale);

/* Minimize H(x) = max_i |x - p_i|: the smallest enclosing ball.  Welzl's
 * recursion over a deterministic fixed-seed shuffle; the radius is the exact
 * max distance from the returned center. */
MinimaxResult smallest_enclosing_ball(const PointSet& ps);

/* Minimize F(x) = max_i (|x - c_i| - r_i): the smallest ball meeting every
 * input ball, with value < 0 when all balls share interior points (|value|
 * is then a penetration depth).  Exact support-subset enumeration: every
 * subset of <= d+1 balls is solved in closed form for the equal-touching
 * point, globally infeasible candidates are discarded, and the smallest
 * feasible value wins.  Deterministic. */
MinimaxResult min_intersecting_ball(const std::vector<Ball>& balls);

/* Indices with value - f_i(minimizer) <= tol_act for the given family. */
std::vector<int> active_set(const MinimaxResult& res, const PointSet& ps, double tol_act);
std::vector<int> active_set(const MinimaxResult& res, const std::vector<Ball>& balls,
                            double tol_act);

/* First-order optimality certificate: convex weights on the active gradients
 * recombining to (numerically) zero.  A singleton active set certifies via
 * weight one on itself (apex case).  Throws NondifferentiableActive when a
 * non-singleton active set contains a constituent whose center coincides
 * with the minimizer. */
ConvexCombination optimality_certificate(const MinimaxResult& res);

} // namespace tvg
