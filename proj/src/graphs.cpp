#include "tvg/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tvg {

Edge make_edge(int i, int j) {
    if (i < 0 || j < 0 || i == j)
        throw InvalidInput("make_edge: endpoints must be distinct and nonnegative");
    return i < j ? Edge{i, j} : Edge{j, i};
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

void validate_endpoints(int n, const std::vector<Edge>& edges, const char* what) {
    for (const Edge& e : edges) {
        if (e[0] < 0 || e[1] >= n || e[0] >= e[1])
            throw InvalidInput(std::string(what) + ": edge endpoints out of range");
    }
}

} // namespace

Tree make_tree(int n, std::vector<Edge> edges) {
    if (n < 1)
        throw InvalidInput("make_tree: need at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
        throw InvalidInput("make_tree: a tree on n vertices has n-1 edges");
    for (Edge& e : edges)
        e = make_edge(e[0], e[1]);
    validate_endpoints(n, edges, "make_tree");
    UnionFind uf(n);
    for (const Edge& e : edges)
        if (!uf.unite(e[0], e[1]))
            throw InvalidInput("make_tree: edges contain a cycle");
    std::sort(edges.begin(), edges.end());
    return Tree{n, std::move(edges)};
}

Matching make_matching(int n, std::vector<Edge> edges) {
    if (n < 2 || n % 2 != 0)
        throw InvalidInput("make_matching: n must be even and positive");
    if (static_cast<int>(edges.size()) != n / 2)
        throw InvalidInput("make_matching: a perfect matching on n vertices has n/2 edges");
    for (Edge& e : edges)
        e = make_edge(e[0], e[1]);
    validate_endpoints(n, edges, "make_matching");
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (const Edge& e : edges) {
        ++seen[static_cast<size_t>(e[0])];
        ++seen[static_cast<size_t>(e[1])];
    }
    for (int c : seen)
        if (c != 1)
            throw InvalidInput("make_matching: every vertex must be covered exactly once");
    std::sort(edges.begin(), edges.end());
    return Matching{n, std::move(edges)};
}

double CostFunction::operator()(double len) const {
    switch (kind_) {
    case Kind::Identity:
        return len;
    case Kind::Square:
        return len * len;
    case Kind::Sqrt:
        return std::sqrt(len);
    case Kind::Table: {
        // Piecewise-linear through the breakpoints, end slopes extrapolated.
        size_t hi = 1;
        while (hi + 1 < table_.size() && table_[hi].first < len)
            ++hi;
        const auto& [x0, y0] = table_[hi - 1];
        const auto& [x1, y1] = table_[hi];
        return y0 + (len - x0) * (y1 - y0) / (x1 - x0);
    }
    }
    throw Error("CostFunction: unreachable");
}

const CostFunction& CostFunction::identity() {
    static const CostFunction f(Kind::Identity, "identity");
    return f;
}

const CostFunction& CostFunction::square() {
    static const CostFunction f(Kind::Square, "square");
    return f;
}

const CostFunction& CostFunction::sqrt() {
    static const CostFunction f(Kind::Sqrt, "sqrt");
    return f;
}

CostFunction CostFunction::table(std::vector<std::pair<double, double>> breakpoints) {
    if (breakpoints.size() < 2)
        throw InvalidInput("CostFunction::table: need at least two breakpoints");
    for (size_t i = 1; i < breakpoints.size(); ++i)
        if (!(breakpoints[i - 1].first < breakpoints[i].first) ||
            !(breakpoints[i - 1].second < breakpoints[i].second))
            throw InvalidInput("CostFunction::table: breakpoints must increase strictly");
    CostFunction f(Kind::Table, "table");
    f.table_ = std::move(breakpoints);
    return f;
}

double cost(const PointSet& ps, const std::vector<Edge>& edges, const CostFunction& f) {
    double s = 0.0;
    for (const Edge& e : edges)
        s += f((ps[e[0]] - ps[e[1]]).norm());
    return s;
}

namespace {

/* Cost in a fixed canonical order (weights descending) so that trees with
 * the same weight multiset sum to bitwise-identical values. */
double canonical_cost(const PointSet& ps, const std::vector<Edge>& edges,
                      const CostFunction& f) {
    std::vector<double> ws;
    ws.reserve(edges.size());
    for (const Edge& e : edges)
        ws.push_back(f((ps[e[0]] - ps[e[1]]).norm()));
    std::sort(ws.begin(), ws.end(), std::greater<double>());
    double s = 0.0;
    for (double w : ws)
        s += w;
    return s;
}

} // namespace

Tree max_sum_tree(const PointSet& ps, const CostFunction& f) {
    const int n = ps.size();
    if (n < 2)
        throw InvalidInput("max_sum_tree: need at least two points");
    struct WEdge {
        double w;
        Edge e;
    };
    std::vector<WEdge> all;
    all.reserve(static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            all.push_back(WEdge{f((ps[i] - ps[j]).norm()), Edge{i, j}});
    // Weight descending, then lexicographic: among cost-optimal trees the
    // greedy picks the lexicographically smallest sorted edge list.
    std::sort(all.begin(), all.end(), [](const WEdge& a, const WEdge& b) {
        if (a.w != b.w)
            return a.w > b.w;
        return a.e < b.e;
    });
    UnionFind uf(n);
    std::vector<Edge> chosen;
    for (const WEdge& we : all) {
        if (uf.unite(we.e[0], we.e[1])) {
            chosen.push_back(we.e);
            if (static_cast<int>(chosen.size()) == n - 1)
                break;
        }
    }
    return make_tree(n, std::move(chosen));
}

Matching max_sum_matching(const PointSet& ps) {
    const int n = ps.size();
    if (n < 2 || n % 2 != 0)
        throw InvalidInput("max_sum_matching: need an even number of points");
    if (n > 22)
        throw InvalidInput("max_sum_matching: exact subset DP is limited to n <= 22");

    std::vector<double> w(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] =
                (ps[i] - ps[j]).norm();
    const auto weight = [&](int i, int j) {
        return w[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
    };

    const unsigned full = (1u << n) - 1u;
    const size_t states = static_cast<size_t>(full) + 1;
    const double ninf = -std::numeric_limits<double>::infinity();
    std::vector<double> dp(states, ninf);
    dp[0] = 0.0;
    for (unsigned mask = 1; mask <= full; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0)
            continue;
        const int i = __builtin_ctz(mask);
        const unsigned rest0 = mask & (mask - 1);  // mask without lowest bit
        double best = ninf;
        for (unsigned mm = rest0; mm != 0; mm &= (mm - 1)) {
            const int j = __builtin_ctz(mm);
            const double c = weight(i, j) + dp[rest0 & ~(1u << j)];
            if (c > best)
                best = c;
        }
        dp[mask] = best;
    }

    // Reconstruct with the smallest partner achieving bitwise equality:
    // among equal-cost optima this is the lexicographically smallest list.
    std::vector<Edge> edges;
    unsigned mask = full;
    while (mask != 0) {
        const int i = __builtin_ctz(mask);
        const unsigned rest0 = mask & (mask - 1);
        bool taken = false;
        for (unsigned mm = rest0; mm != 0; mm &= (mm - 1)) {
            const int j = __builtin_ctz(mm);
            if (weight(i, j) + dp[rest0 & ~(1u << j)] == dp[mask]) {
                edges.push_back(Edge{i, j});
                mask = rest0 & ~(1u << j);
                taken = true;
                break;
            }
        }
        if (!taken)
            throw Error("max_sum_matching: reconstruction failed");
    }
    return make_matching(n, std::move(edges));
}

namespace {

Tree decode_pruefer(int n, const std::vector<int>& seq) {
    std::vector<int> degs(static_cast<size_t>(n), 1);
    for (int v : seq)
        ++degs[static_cast<size_t>(v)];
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) - 1);
    for (int v : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degs[static_cast<size_t>(leaf)] == 1) {
                edges.push_back(make_edge(leaf, v));
                --degs[static_cast<size_t>(leaf)];
                --degs[static_cast<size_t>(v)];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
        if (degs[static_cast<size_t>(v)] == 1) {
            if (a < 0)
                a = v;
            else
                b = v;
        }
    }
    edges.push_back(make_edge(a, b));
    return make_tree(n, std::move(edges));
}

} // namespace

Tree brute_force_tree(const PointSet& ps, const CostFunction& f) {
    const int n = ps.size();
    if (n < 2)
        throw InvalidInput("brute_force_tree: need at least two points");
    if (n > 8)
        throw InvalidInput("brute_force_tree: limited to n <= 8");
    if (n == 2)
        return make_tree(2, {Edge{0, 1}});

    std::vector<int> seq(static_cast<size_t>(n) - 2, 0);
    bool have = false;
    Tree best;
    double best_cost = 0.0;
    for (;;) {
        Tree t = decode_pruefer(n, seq);
        const double c = canonical_cost(ps, t.edges, f);
        if (!have || c > best_cost || (c == best_cost && t.edges < best.edges)) {
            best = t;
            best_cost = c;
            have = true;
        }
        // Next sequence in base n.
        int pos = n - 3;
        while (pos >= 0 && seq[static_cast<size_t>(pos)] == n - 1) {
            seq[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++seq[static_cast<size_t>(pos)];
    }
    return best;
}

namespace {

void enumerate_matchings(const PointSet& ps, std::vector<int>& avail, std::vector<Edge>& cur,
                         Matching& best, double& best_cost, bool& have) {
    if (avail.empty()) {
        // Right fold in reverse pairing order, mirroring the DP's recursion.
        double c = 0.0;
        for (auto it = cur.rbegin(); it != cur.rend(); ++it)
            c = (ps[(*it)[0]] - ps[(*it)[1]]).norm() + c;
        if (!have || c > best_cost) {
            best.edges = cur;
            best_cost = c;
            have = true;
        }
        return;
    }
    const int i = avail.front();
    for (size_t jpos = 1; jpos < avail.size(); ++jpos) {
        const int j = avail[jpos];
        std::vector<int> rest;
        rest.reserve(avail.size() - 2);
        for (size_t k = 1; k < avail.size(); ++k)
            if (k != jpos)
                rest.push_back(avail[k]);
        cur.push_back(Edge{i, j});
        enumerate_matchings(ps, rest, cur, best, best_cost, have);
        cur.pop_back();
    }
}

} // namespace

Matching brute_force_matching(const PointSet& ps) {
    const int n = ps.size();
    if (n < 2 || n % 2 != 0)
        throw InvalidInput("brute_force_matching: need an even number of points");
    if (n > 12)
        throw InvalidInput("brute_force_matching: limited to n <= 12");
    std::vector<int> avail(static_cast<size_t>(n));
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<Edge> cur;
    Matching best;
    best.n = n;
    double best_cost = 0.0;
    bool have = false;
    enumerate_matchings(ps, avail, cur, best, best_cost, have);
    return make_matching(n, std::move(best.edges));
}

} // namespace tvg
