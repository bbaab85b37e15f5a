#pragma once

#include "tvg/tverberg.hpp"

namespace tvg {

/* Internal tangent construction at an active edge ab (planar, all fields in
 * the original frame).  With x* the minimizer and r the minimax value, the
 * circle of radius r about x* touches the induced ball of ab at
 *
 *   tangency = x* + r * u,  u = (mid - x*)/|mid - x*|,
 *
 * and the tangent line there (direction tangent_dir, perpendicular to u)
 * carries the projections a_proj, b_proj of the endpoints.  The vertex radii
 * r_a = |a - a_proj|, r_b = |b - b_proj| satisfy r_a + r_b = |a - b| and
 * tangency is the midpoint of a_proj b_proj; both are asserted here at
 * 1e-9 * scale. */
struct TangentData {
    Edge edge{};
    Point tangency;
    Point tangent_dir;
    Point a_proj;
    Point b_proj;
    double r_a = 0.0;
    double r_b = 0.0;
};

/* Vertices of the Caratheodory submatching with their tangent radii, the
 * submatching as blue edges, and red edges uv with |u-v| > r_u + r_v + tau.
 * Blue edges satisfy |a-b| = r_a + r_b, so they are never red. */
struct RedBlueGraph {
    std::vector<int> vertices;  // point indices, ascending
    std::vector<double> radii;  // aligned with vertices
    std::vector<Edge> blue;
    std::vector<Edge> red;
};

double vertex_radius(const RedBlueGraph& g, int v);
bool has_red(const RedBlueGraph& g, int u, int v);

/* Even cycle alternating blue/red: vertices x1 y1 x2 y2 [x3 y3] with
 * (x_k, y_k) blue and (y_k, x_{k+1 mod}) red. */
struct AlternatingCycle {
    std::vector<int> vertices;
};

/* Edges of m whose constraint is active at the minimizer:
 * value - (|mid_e - x*| - |a-b|/2) <= tol_act.  Sorted lexicographically. */
std::vector<Edge> active_submatching(const PointSet& ps, const Matching& m,
                                     const MinimaxResult& res);

/* Caratheodory reduction: the smallest prefix (pairs before triples, both
 * scanned in lexicographic order) of active edges whose midpoints contain
 * the minimizer in their convex hull.  Throws CertificateFailure when
 * neither a pair nor a triple works within tolerance. */
std::vector<Edge> caratheodory_submatching(const PointSet& ps,
                                           const std::vector<Edge>& active,
                                           const Point& minimizer);

/* Tangent construction for one active edge; see TangentData.  Throws
 * DegenerateMidpoint when |mid - x*| <= 1e-12 * scale. */
TangentData tangent_data(const PointSet& ps, const Edge& edge, const Point& minimizer,
                         double r);

RedBlueGraph red_blue_graph(const PointSet& ps, const std::vector<TangentData>& tangents);

/* Exhaustive search for an alternating cycle: all 4-cycles over blue edge
 * pairs first, then all 6-cycles, in a fixed deterministic order.  Throws
 * NoCycleFound with diagnostics when none exists. */
AlternatingCycle find_alternating_cycle(const RedBlueGraph& g);

/* One local-search step.  improved == false means the matching is already
 * open and `certificate` is the open witness; otherwise `matching` is the
 * strictly costlier swap along an alternating cycle and `certificate` the
 * pre-swap (non-open) certificate.  The strict cost inequality is asserted
 * before returning. */
struct ImproveOutcome {
    bool improved = false;
    Matching matching;
    TverbergCertificate certificate;
};

ImproveOutcome improve_step(const PointSet& ps, const Matching& m);

/* Iterate improve_step until open.  costs[0] is the initial cost and one
 * entry is appended per accepted swap; the sequence is strictly increasing,
 * which also guarantees termination. */
struct LocalSearchResult {
    Matching matching;
    TverbergCertificate certificate;
    std::vector<double> costs;
    int steps = 0;
};

LocalSearchResult local_search(const PointSet& ps, const Matching& initial, int max_iters);

/* Replace the second endpoint of edge ab by c.  Requires b on the segment
 * ac within 1e-12 * scale (so the move is an outward elongation), which
 * preserves the max-sum property of the matching. */
std::pair<PointSet, Matching> elongate(const PointSet& ps, const Matching& m,
                                       const Edge& ab, const Point& c);

/* Move every matched pair's endpoints outward along its segment direction
 * (zero-length edges use e1 rotated by edge-index * golden angle) by
 * eps * (1 + edge index), retrying with a slightly scaled factor until all
 * points are pairwise distinct.  Each original induced ball is contained in
 * its perturbed counterpart, and max-sum optimality is preserved. */
std::pair<PointSet, Matching> perturb_to_distinct(const PointSet& ps, const Matching& m,
                                                  double eps);

} // namespace tvg
