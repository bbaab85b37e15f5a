#include "tvg/improve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tvg {

std::vector<Edge> active_submatching(const PointSet& ps, const Matching& m,
                                     const MinimaxResult& res) {
    std::vector<Ball> balls;
    balls.reserve(m.edges.size());
    for (const Edge& e : m.edges)
        balls.push_back(induced_ball(ps[e[0]], ps[e[1]]));
    const double tol = active_tolerance(scale_of(balls));
    std::vector<Edge> out;
    for (size_t i = 0; i < m.edges.size(); ++i) {
        const double f = (res.minimizer - balls[i].center).norm() - balls[i].radius;
        if (res.value - f <= tol)
            out.push_back(m.edges[i]);
    }
    return out;  // m.edges is sorted, so the filter preserves lex order
}

std::vector<Edge> caratheodory_submatching(const PointSet& ps,
                                           const std::vector<Edge>& active,
                                           const Point& minimizer) {
    const double tol = 1e-8 * scale_of(ps);
    std::vector<Point> mids;
    mids.reserve(active.size());
    for (const Edge& e : active)
        mids.push_back(0.5 * (ps[e[0]] + ps[e[1]]) - minimizer);

    const int k = static_cast<int>(active.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (origin_in_convex_hull({mids[static_cast<size_t>(i)],
                                       mids[static_cast<size_t>(j)]},
                                      tol))
                return {active[static_cast<size_t>(i)], active[static_cast<size_t>(j)]};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                if (origin_in_convex_hull({mids[static_cast<size_t>(i)],
                                           mids[static_cast<size_t>(j)],
                                           mids[static_cast<size_t>(l)]},
                                          tol))
                    return {active[static_cast<size_t>(i)], active[static_cast<size_t>(j)],
                            active[static_cast<size_t>(l)]};
    throw CertificateFailure(
        "caratheodory_submatching: no pair or triple of active midpoints "
        "contains the minimizer");
}

TangentData tangent_data(const PointSet& ps, const Edge& edge, const Point& minimizer,
                         double r) {
    if (ps.dim != 2)
        throw InvalidInput("tangent_data: the tangent construction is planar");
    const double scale = scale_of(ps);
    const Point& a = ps[edge[0]];
    const Point& b = ps[edge[1]];
    const Point mid = 0.5 * (a + b);
    const double dist = (mid - minimizer).norm();
    if (dist <= 1e-12 * scale)
        throw DegenerateMidpoint("tangent_data: midpoint coincides with the minimizer");

    TangentData td;
    td.edge = edge;
    const Point u = (mid - minimizer) / dist;
    td.tangency = minimizer + r * u;
    td.tangent_dir = make_point({-u(1), u(0)});
    td.a_proj = td.tangency + (a - td.tangency).dot(td.tangent_dir) * td.tangent_dir;
    td.b_proj = td.tangency + (b - td.tangency).dot(td.tangent_dir) * td.tangent_dir;
    td.r_a = (a - td.a_proj).norm();
    td.r_b = (b - td.b_proj).norm();

    // r_a + r_b differs from |a-b| by exactly twice the activity slack of
    // the edge, so allow that on top of the rounding budget.
    const double rho = 0.5 * (a - b).norm();
    const double slack = std::max(0.0, r - (dist - rho));
    if (std::abs(td.r_a + td.r_b - (a - b).norm()) > 2.0 * slack + 1e-9 * scale)
        throw CertificateFailure("tangent_data: radius identity violated");
    if ((0.5 * (td.a_proj + td.b_proj) - td.tangency).norm() > 1e-9 * scale)
        throw CertificateFailure("tangent_data: tangency is not the projection midpoint");
    return td;
}

double vertex_radius(const RedBlueGraph& g, int v) {
    for (size_t i = 0; i < g.vertices.size(); ++i)
        if (g.vertices[i] == v)
            return g.radii[i];
    throw InvalidInput("vertex_radius: vertex not in graph");
}

bool has_red(const RedBlueGraph& g, int u, int v) {
    const Edge e = make_edge(u, v);
    return std::find(g.red.begin(), g.red.end(), e) != g.red.end();
}

RedBlueGraph red_blue_graph(const PointSet& ps, const std::vector<TangentData>& tangents) {
    RedBlueGraph g;
    for (const TangentData& td : tangents) {
        g.vertices.push_back(td.edge[0]);
        g.vertices.push_back(td.edge[1]);
        g.blue.push_back(td.edge);
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    if (std::adjacent_find(g.vertices.begin(), g.vertices.end()) != g.vertices.end())
        throw InvalidInput("red_blue_graph: tangent edges are not a submatching");
    std::sort(g.blue.begin(), g.blue.end());

    g.radii.resize(g.vertices.size(), 0.0);
    for (const TangentData& td : tangents) {
        for (size_t i = 0; i < g.vertices.size(); ++i) {
            if (g.vertices[i] == td.edge[0])
                g.radii[i] = td.r_a;
            if (g.vertices[i] == td.edge[1])
                g.radii[i] = td.r_b;
        }
    }

    const double tau = 1e-9 * scale_of(ps);
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        for (size_t j = i + 1; j < g.vertices.size(); ++j) {
            const Edge e = make_edge(g.vertices[i], g.vertices[j]);
            if (std::find(g.blue.begin(), g.blue.end(), e) != g.blue.end())
                continue;  // a blue pair has |a-b| = r_a + r_b: never red
            const double len = (ps[e[0]] - ps[e[1]]).norm();
            if (len > g.radii[i] + g.radii[j] + tau)
                g.red.push_back(e);
        }
    }
    return g;
}

AlternatingCycle find_alternating_cycle(const RedBlueGraph& g) {
    const int nb = static_cast<int>(g.blue.size());
    // Both orientations of each blue edge.
    const auto oriented = [&](int b, int flip) {
        const Edge& e = g.blue[static_cast<size_t>(b)];
        return flip ? std::pair<int, int>{e[1], e[0]} : std::pair<int, int>{e[0], e[1]};
    };

    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j)
            for (int fi = 0; fi < 2; ++fi)
                for (int fj = 0; fj < 2; ++fj) {
                    const auto [x1, y1] = oriented(i, fi);
                    const auto [x2, y2] = oriented(j, fj);
                    if (has_red(g, y1, x2) && has_red(g, y2, x1))
                        return AlternatingCycle{{x1, y1, x2, y2}};
                }

    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            for (int l = 0; l < nb; ++l) {
                if (i == j || i == l || j == l || j > l)
                    continue;  // j < l: each cyclic order once, i anchored
                for (int fi = 0; fi < 2; ++fi)
                    for (int fj = 0; fj < 2; ++fj)
                        for (int fl = 0; fl < 2; ++fl) {
                            const auto [x1, y1] = oriented(i, fi);
                            const auto [x2, y2] = oriented(j, fj);
                            const auto [x3, y3] = oriented(l, fl);
                            if (has_red(g, y1, x2) && has_red(g, y2, x3) &&
                                has_red(g, y3, x1))
                                return AlternatingCycle{{x1, y1, x2, y2, x3, y3}};
                        }
            }

    std::ostringstream msg;
    msg << "find_alternating_cycle: no blue/red alternating cycle; blue=" << nb
        << " red=" << g.red.size();
    throw NoCycleFound(msg.str());
}

ImproveOutcome improve_step(const PointSet& ps, const Matching& m) {
    if (m.n != ps.size())
        throw InvalidInput("improve_step: matching size differs from point count");
    auto [cert, res] = verify_tverberg_full(ps, m.edges);
    if (cert.classification == Classification::Open)
        return ImproveOutcome{false, m, std::move(cert)};

    const double scale = scale_of(ps);
    if (min_pairwise_distance(ps) <= 1e-12 * scale)
        throw DuplicatePoints("improve_step: local search requires distinct points");

    const std::vector<Edge> active = active_submatching(ps, m, res);
    const std::vector<Edge> cara = caratheodory_submatching(ps, active, res.minimizer);
    const double r = std::max(0.0, res.value);
    std::vector<TangentData> tangents;
    tangents.reserve(cara.size());
    for (const Edge& e : cara)
        tangents.push_back(tangent_data(ps, e, res.minimizer, r));
    const RedBlueGraph rb = red_blue_graph(ps, tangents);
    const AlternatingCycle cyc = find_alternating_cycle(rb);

    // Swap: drop the cycle's blue edges, add its red edges.
    std::vector<Edge> edges;
    const int len = static_cast<int>(cyc.vertices.size());
    std::vector<Edge> dropped;
    for (int k = 0; k < len; k += 2)
        dropped.push_back(make_edge(cyc.vertices[static_cast<size_t>(k)],
                                    cyc.vertices[static_cast<size_t>(k) + 1]));
    for (const Edge& e : m.edges)
        if (std::find(dropped.begin(), dropped.end(), e) == dropped.end())
            edges.push_back(e);
    for (int k = 1; k < len; k += 2)
        edges.push_back(make_edge(cyc.vertices[static_cast<size_t>(k)],
                                  cyc.vertices[static_cast<size_t>((k + 1) % len)]));
    Matching next = make_matching(m.n, std::move(edges));

    if (!(cost(ps, next.edges) > cost(ps, m.edges)))
        throw CertificateFailure("improve_step: swap did not increase the cost");
    return ImproveOutcome{true, std::move(next), std::move(cert)};
}

LocalSearchResult local_search(const PointSet& ps, const Matching& initial, int max_iters) {
    if (max_iters < 0)
        throw InvalidInput("local_search: negative iteration budget");
    LocalSearchResult out;
    out.matching = initial;
    out.costs.push_back(cost(ps, initial.edges));
    // Up to max_iters accepted swaps, plus a final openness check.
    for (int it = 0; it <= max_iters; ++it) {
        ImproveOutcome step = improve_step(ps, out.matching);
        if (!step.improved) {
            out.certificate = std::move(step.certificate);
            return out;
        }
        if (it == max_iters)
            break;
        out.matching = std::move(step.matching);
        out.costs.push_back(cost(ps, out.matching.edges));
        ++out.steps;
    }
    throw IterationLimit("local_search: no open matching within the iteration budget");
}

std::pair<PointSet, Matching> elongate(const PointSet& ps, const Matching& m,
                                       const Edge& ab, const Point& c) {
    if (std::find(m.edges.begin(), m.edges.end(), ab) == m.edges.end())
        throw InvalidInput("elongate: edge is not in the matching");
    if (c.size() != ps.dim)
        throw DimensionMismatch("elongate: replacement point has the wrong dimension");
    const Point& a = ps[ab[0]];
    const Point& b = ps[ab[1]];
    const double scale = std::max(scale_of(ps), 1.0 + c.norm());
    const double detour = (a - b).norm() + (b - c).norm() - (a - c).norm();
    if (std::abs(detour) > 1e-12 * scale)
        throw InvalidInput("elongate: replacement must extend the edge beyond b");
    std::vector<Point> pts = ps.points;
    pts[static_cast<size_t>(ab[1])] = c;
    return {PointSet(ps.dim, std::move(pts)), m};
}

std::pair<PointSet, Matching> perturb_to_distinct(const PointSet& ps, const Matching& m,
                                                  double eps) {
    if (m.n != ps.size())
        throw InvalidInput("perturb_to_distinct: matching size differs from point count");
    if (!(eps > 0.0))
        throw InvalidInput("perturb_to_distinct: eps must be positive");
    const double scale = scale_of(ps);
    constexpr double kGolden = 2.3999632297286533;  // golden angle in radians

    for (int attempt = 0; attempt < 64; ++attempt) {
        const double factor = 1.0 + attempt * 0x1p-16;
        std::vector<Point> pts = ps.points;
        for (size_t k = 0; k < m.edges.size(); ++k) {
            const Edge& e = m.edges[k];
            const Point& a = ps[e[0]];
            const Point& b = ps[e[1]];
            Point dir = b - a;
            const double len = dir.norm();
            if (len > 0.0) {
                dir /= len;
            } else {
                dir = Point::Zero(ps.dim);
                if (ps.dim >= 2) {
                    dir(0) = std::cos(static_cast<double>(k) * kGolden);
                    dir(1) = std::sin(static_cast<double>(k) * kGolden);
                } else {
                    dir(0) = 1.0;
                }
            }
            const double delta = eps * (1.0 + static_cast<double>(k)) * factor;
            pts[static_cast<size_t>(e[0])] = a - delta * dir;
            pts[static_cast<size_t>(e[1])] = b + delta * dir;
        }
        PointSet moved(ps.dim, std::move(pts));
        if (min_pairwise_distance(moved) > 1e-12 * scale)
            return {std::move(moved), m};
    }
    throw Error("perturb_to_distinct: could not separate the points");
}

} // namespace tvg
