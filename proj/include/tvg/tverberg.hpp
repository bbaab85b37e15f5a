#pragma once

#include "tvg/graphs.hpp"
#include "tvg/minimax.hpp"

namespace tvg {

/* OPEN            all edge-induced open balls share the witness
 * CLOSED_BOUNDARY the closed balls share the witness, at least one only on
 *                 its boundary (within tolerance)
 * NONE            no common point; the witness is the best candidate found */
enum class Classification { Open, ClosedBoundary, None };

const char* to_string(Classification c);

/* Witness certificate for the common-point property of the edge-induced
 * balls.
 *
 *   witness  candidate common point
 *   value    max_e (|witness - center_e| - radius_e); for the minimizing
 *            path this is the minimum of F, for the tree path it is F
 *            evaluated at the smallest-enclosing-ball center
 *   slacks   per edge: radius_e - |witness - center_e|  (= -f_e(witness))
 *   depth    max(0, -value): how deep the witness sits in every ball
 */
struct TverbergCertificate {
    Point witness;
    double value = 0.0;
    std::vector<double> slacks;
    Classification classification = Classification::None;
    double depth = 0.0;
};

/* Classification threshold: 1e-9 * scale on the value. */
double classification_tolerance(double scale);

/* Per-edge dot products <p - witness, q - witness>; nonpositive iff the
 * witness lies in the closed ball induced by pq. */
std::vector<double> edge_dots(const PointSet& ps, const std::vector<Edge>& edges,
                              const Point& witness);

/* Verify via the minimizing witness: build the induced balls, minimize F,
 * classify by sign of the minimum. */
TverbergCertificate verify_tverberg(const PointSet& ps, const std::vector<Edge>& edges);

/* Same, also exposing the solver result (witness = minimizer). */
std::pair<TverbergCertificate, MinimaxResult>
verify_tverberg_full(const PointSet& ps, const std::vector<Edge>& edges);

/* Verify a tree with the smallest-enclosing-ball center as witness and the
 * per-edge dot-product criterion <p - x*, q - x*> <= tau.  Classification
 * follows the dots (tolerance 1e-9 * scale^2, matching their quadratic
 * units); value and slacks report F at the witness. */
TverbergCertificate tree_witness_seb(const PointSet& ps, const Tree& tree);

/* max(0, -min F) over the matching's induced balls. */
double depth_of_matching(const PointSet& ps, const Matching& m);

} // namespace tvg
