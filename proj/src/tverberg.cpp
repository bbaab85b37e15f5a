#include "tvg/tverberg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tvg {

const char* to_string(Classification c) {
    switch (c) {
    case Classification::Open:
        return "OPEN";
    case Classification::ClosedBoundary:
        return "CLOSED_BOUNDARY";
    case Classification::None:
        return "NONE";
    }
    return "?";
}

double classification_tolerance(double scale) {
    return 1e-9 * scale;
}

std::vector<double> edge_dots(const PointSet& ps, const std::vector<Edge>& edges,
                              const Point& witness) {
    std::vector<double> dots;
    dots.reserve(edges.size());
    for (const Edge& e : edges)
        dots.push_back((ps[e[0]] - witness).dot(ps[e[1]] - witness));
    return dots;
}

namespace {

std::vector<Ball> induced_balls(const PointSet& ps, const std::vector<Edge>& edges) {
    if (edges.empty())
        throw InvalidInput("verify: no edges to induce balls from");
    std::vector<Ball> balls;
    balls.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e[0] < 0 || e[1] >= ps.size() || e[0] >= e[1])
            throw InvalidInput("verify: edge endpoints out of range");
        balls.push_back(induced_ball(ps[e[0]], ps[e[1]]));
    }
    return balls;
}

Classification classify_value(double value, double tau) {
    if (value < -tau)
        return Classification::Open;
    if (value <= tau)
        return Classification::ClosedBoundary;
    return Classification::None;
}

TverbergCertificate certificate_at(const std::vector<Ball>& balls, const Point& witness,
                                   double value, Classification cls) {
    TverbergCertificate cert;
    cert.witness = witness;
    cert.value = value;
    for (const Ball& b : balls)
        cert.slacks.push_back(b.radius - (witness - b.center).norm());
    cert.classification = cls;
    cert.depth = std::max(0.0, -value);
    return cert;
}

} // namespace

std::pair<TverbergCertificate, MinimaxResult>
verify_tverberg_full(const PointSet& ps, const std::vector<Edge>& edges) {
    const std::vector<Ball> balls = induced_balls(ps, edges);
    MinimaxResult res = min_intersecting_ball(balls);
    const double tau = classification_tolerance(scale_of(balls));
    TverbergCertificate cert =
        certificate_at(balls, res.minimizer, res.value, classify_value(res.value, tau));
    return {std::move(cert), std::move(res)};
}

TverbergCertificate verify_tverberg(const PointSet& ps, const std::vector<Edge>& edges) {
    return verify_tverberg_full(ps, edges).first;
}

TverbergCertificate tree_witness_seb(const PointSet& ps, const Tree& tree) {
    if (tree.n != ps.size())
        throw InvalidInput("tree_witness_seb: tree size differs from point count");
    const std::vector<Ball> balls = induced_balls(ps, tree.edges);
    const MinimaxResult seb = smallest_enclosing_ball(ps);
    const Point& witness = seb.minimizer;

    // Classify on the dot-product criterion <p - x*, q - x*> <= 0; the
    // tolerance is quadratic in the scale to match the dots' units.
    const double s = scale_of(ps);
    const double tau = 1e-9 * s * s;
    const std::vector<double> dots = edge_dots(ps, tree.edges, witness);
    const double worst = *std::max_element(dots.begin(), dots.end());

    double value = -std::numeric_limits<double>::infinity();
    for (const Ball& b : balls)
        value = std::max(value, (witness - b.center).norm() - b.radius);
    return certificate_at(balls, witness, value, classify_value(worst, tau));
}

double depth_of_matching(const PointSet& ps, const Matching& m) {
    return verify_tverberg(ps, m.edges).depth;
}

} // namespace tvg
