#pragma once

#include <array>
#include <string>

#include "tvg/geometry.hpp"

namespace tvg {

/* Undirected edge over point indices, normalized so edge[0] < edge[1]. */
using Edge = std::array<int, 2>;

Edge make_edge(int i, int j);

/* Spanning tree over points 0..n-1: exactly n-1 edges, connected, acyclic.
 * Edges are stored sorted lexicographically. */
struct Tree {
    int n = 0;
    std::vector<Edge> edges;
};

/* Perfect matching over points 0..n-1 (n even): every index in exactly one
 * pair.  Edges are stored sorted lexicographically. */
struct Matching {
    int n = 0;
    std::vector<Edge> edges;
};

Tree make_tree(int n, std::vector<Edge> edges);
Matching make_matching(int n, std::vector<Edge> edges);

/* Strictly increasing transform applied to edge lengths before summing.
 * Table variant interpolates a strictly increasing breakpoint list
 * piecewise-linearly and extrapolates the end slopes. */
class CostFunction {
  public:
    double operator()(double len) const;
    const std::string& name() const { return name_; }

    static const CostFunction& identity();
    static const CostFunction& square();
    static const CostFunction& sqrt();
    static CostFunction table(std::vector<std::pair<double, double>> breakpoints);

  private:
    enum class Kind { Identity, Square, Sqrt, Table };
    CostFunction(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_ = Kind::Identity;
    std::vector<std::pair<double, double>> table_;
    std::string name_;
};

/* Sum of f(|a-b|) over the edges, in stored edge order. */
double cost(const PointSet& ps, const std::vector<Edge>& edges,
            const CostFunction& f = CostFunction::identity());

/* Maximum-cost spanning tree of the complete Euclidean graph under f.
 * Greedy on (weight desc, edge lex asc); among cost-optimal trees this
 * yields the lexicographically smallest sorted edge list. */
Tree max_sum_tree(const PointSet& ps, const CostFunction& f = CostFunction::identity());

/* Maximum-cost perfect matching of the complete Euclidean graph.  Exact
 * subset DP (lowest-set-bit decomposition), n <= 22; ties resolve to the
 * lexicographically smallest sorted edge list. */
Matching max_sum_matching(const PointSet& ps);

/* Exhaustive oracles.  brute_force_tree enumerates every labeled tree via
 * Pruefer sequences (n <= 8); brute_force_matching enumerates all (n-1)!!
 * perfect matchings (n <= 12).  Both apply the same lexicographic tie-break
 * as the fast routes. */
Tree brute_force_tree(const PointSet& ps, const CostFunction& f = CostFunction::identity());
Matching brute_force_matching(const PointSet& ps);

} // namespace tvg
